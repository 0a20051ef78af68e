// Copyright 2026 The ghzbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ghzbell/record.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>

namespace ghzbell {

namespace {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::int64_t parse_int(std::string_view s, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc::result_out_of_range) {
    throw RecordError(std::string("integer overflow in ") + what + ": '" +
                      std::string(s) + "'");
  }
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw RecordError(std::string("malformed ") + what + ": '" +
                      std::string(s) + "'");
  }
  return v;
}

double parse_real(std::string_view s, const char* what) {
  // strtod accepts the %.12g output including exponents and inf.
  std::string tmp(s);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size()) {
    throw RecordError(std::string("malformed ") + what + ": '" + tmp + "'");
  }
  return v;
}

}  // namespace

void validate(const InequalityRecord& r) {
  if (r.local_bound < 0) throw RecordError("local bound must be nonnegative");
  if (r.quantum_value > 0.0) {
    const double expect = static_cast<double>(r.local_bound) / r.quantum_value;
    if (std::abs(expect - r.v_crit) > 1e-9 * std::max(1.0, std::abs(expect))) {
      throw RecordError("v_crit " + format_real(r.v_crit) + " differs from L/Q " +
                        format_real(expect));
    }
  }
  if (r.digest.empty() || r.digest.find_first_of("\t\n ") != std::string::npos) {
    throw RecordError("digest must be a nonempty token");
  }
  if (r.provenance.find_first_of("\t\n\r") != std::string::npos) {
    throw RecordError("provenance may not contain TAB or newline");
  }
}

std::string format_record(const InequalityRecord& r) {
  validate(r);
  std::string line = r.tensor.scenario().to_string();
  line += '\t';
  bool first = true;
  for (std::int64_t c : r.tensor.coeffs()) {
    if (!first) line += ' ';
    line += std::to_string(c);
    first = false;
  }
  line += '\t';
  line += std::to_string(r.local_bound);
  line += '\t';
  line += format_real(r.quantum_value);
  line += '\t';
  line += format_real(r.v_crit);
  line += '\t';
  line += r.tight ? "true" : "false";
  line += '\t';
  line += r.digest;
  line += '\t';
  line += r.provenance;
  return line;
}

InequalityRecord parse_record(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto fields = split(line, '\t');
  if (fields.size() != 8) {
    throw RecordError("expected 8 TAB-separated fields, got " +
                      std::to_string(fields.size()));
  }
  Scenario s = [&] {
    try {
      return Scenario::parse(fields[0]);
    } catch (const ScenarioError& e) {
      throw RecordError(e.what());
    }
  }();
  std::vector<std::int64_t> coeffs;
  for (std::string_view tok : split(fields[1], ' ')) {
    if (tok.empty()) continue;
    coeffs.push_back(parse_int(tok, "coefficient"));
  }
  if (static_cast<int>(coeffs.size()) != s.dim()) {
    throw RecordError("scenario " + s.to_string() + " needs " +
                      std::to_string(s.dim()) + " coefficients, got " +
                      std::to_string(coeffs.size()));
  }
  InequalityRecord r;
  r.tensor = IntTensor(s, std::move(coeffs));
  r.local_bound = parse_int(fields[2], "local bound");
  r.quantum_value = parse_real(fields[3], "quantum value");
  r.v_crit = parse_real(fields[4], "v_crit");
  if (fields[5] == "true") {
    r.tight = true;
  } else if (fields[5] == "false") {
    r.tight = false;
  } else {
    throw RecordError("tight flag must be true or false");
  }
  r.digest = std::string(fields[6]);
  r.provenance = std::string(fields[7]);
  if (r.local_bound < 0) throw RecordError("local bound must be nonnegative");
  if (r.digest.empty()) throw RecordError("empty digest field");
  return r;
}

void write_record(std::ostream& out, const InequalityRecord& r) {
  out << format_record(r) << '\n';
}

std::optional<InequalityRecord> read_record(std::istream& in, int& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line == "\r") continue;
    try {
      return parse_record(line);
    } catch (const RecordError& e) {
      throw RecordError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return std::nullopt;
}

std::vector<InequalityRecord> read_records(std::istream& in) {
  std::vector<InequalityRecord> out;
  int line_no = 0;
  while (auto r = read_record(in, line_no)) out.push_back(std::move(*r));
  return out;
}

std::vector<InequalityRecord> load_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RecordError("cannot open " + path.string());
  return read_records(in);
}

void save_records(const std::filesystem::path& path,
                  const std::vector<InequalityRecord>& records) {
  std::ofstream out(path);
  if (!out) throw RecordError("cannot write " + path.string());
  for (const auto& r : records) write_record(out, r);
  if (!out) throw RecordError("write failed for " + path.string());
}

}  // namespace ghzbell
