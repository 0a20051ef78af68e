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

#include <set>
#include <sstream>

#include "doctest.h"
#include "ghzbell/record.hpp"
#include "support.hpp"

using namespace ghzbell;

namespace {

InequalityRecord mermin_record() {
  InequalityRecord r;
  r.tensor = mermin_tensor();
  r.local_bound = 2;
  r.quantum_value = 4.0;
  r.v_crit = 0.5;
  r.tight = true;
  r.digest = "abc123";
  r.provenance = "mermin";
  return r;
}

std::string replace_field(std::string line, int field, const std::string& value) {
  std::size_t start = 0;
  for (int f = 0; f < field; ++f) start = line.find('\t', start) + 1;
  const std::size_t end = line.find('\t', start);
  return line.replace(start, end - start, value);
}

}  // namespace

TEST_SUITE("record") {

TEST_CASE("mermin record round trip") {
  const InequalityRecord r = mermin_record();
  std::stringstream ss;
  write_record(ss, r);
  const auto back = read_records(ss);
  REQUIRE(back.size() == 1);
  CHECK(back[0] == r);
  CHECK(format_record(r) == "2x2x2\t1 0 0 -1 0 -1 -1 0\t2\t4\t0.5\ttrue\tabc123\tmermin");
}

TEST_CASE("real fields keep 12 significant digits") {
  InequalityRecord r = mermin_record();
  r.local_bound = 44;
  r.quantum_value = 88.058118358123456;
  r.v_crit = 44.0 / r.quantum_value;
  const InequalityRecord back = parse_record(format_record(r));
  CHECK(std::abs(back.quantum_value - r.quantum_value) <= 1e-11 * r.quantum_value);
  CHECK(std::abs(back.v_crit - r.v_crit) <= 1e-11 * r.v_crit);
}

TEST_CASE("coefficient count must match the scenario") {
  const std::string line = format_record(mermin_record());
  CHECK_THROWS_WITH_AS(parse_record(replace_field(line, 1, "1 0 0 -1 0 -1 -1")),
                       doctest::Contains("needs 8 coefficients, got 7"), RecordError);
}

TEST_CASE("malformed lines are rejected") {
  const std::string line = format_record(mermin_record());
  CHECK_THROWS_AS(parse_record("2x2x2\t1 2 3"), RecordError);
  CHECK_THROWS_AS(parse_record(replace_field(line, 0, "2x2")), RecordError);
  CHECK_THROWS_AS(parse_record(replace_field(line, 2, "two")), RecordError);
  CHECK_THROWS_AS(parse_record(replace_field(line, 3, "4.0x")), RecordError);
  CHECK_THROWS_AS(parse_record(replace_field(line, 5, "yes")), RecordError);
  CHECK_THROWS_AS(parse_record(replace_field(line, 2, "-1")), RecordError);
  CHECK_THROWS_WITH_AS(parse_record(replace_field(line, 1, "1 0 0 -1 0 -1 -1 99999999999999999999")),
                       doctest::Contains("integer overflow"), RecordError);
}

TEST_CASE("write refuses inconsistent records") {
  InequalityRecord r = mermin_record();
  r.v_crit = 0.4;
  CHECK_THROWS_AS(format_record(r), RecordError);
  r = mermin_record();
  r.provenance = "a\tb";
  CHECK_THROWS_AS(format_record(r), RecordError);
  r = mermin_record();
  r.digest = "";
  CHECK_THROWS_AS(format_record(r), RecordError);
}

TEST_CASE("comments and blank lines are skipped, errors carry line numbers") {
  std::stringstream ss;
  ss << "# header\n\n" << format_record(mermin_record()) << "\n# tail\n";
  CHECK(read_records(ss).size() == 1);
  std::stringstream bad;
  bad << "# header\n" << format_record(mermin_record()) << "\nnonsense\n";
  CHECK_THROWS_WITH_AS(read_records(bad), doctest::Contains("line 3"), RecordError);
}

TEST_CASE("shipped catalog") {
  const auto records = load_records(GHZBELL_DEFAULT_CATALOG);
  CHECK(records.size() == 36);
  std::set<std::string> labels;
  for (const auto& r : records) {
    labels.insert(r.provenance);
    CHECK(r.tight);
    CHECK(static_cast<double>(r.local_bound) / r.quantum_value == doctest::Approx(r.v_crit));
  }
  CHECK(labels.size() == records.size());
  const auto& e = find_entry(catalog(), "V_343^1");
  CHECK(e.published_bound == 44);
  CHECK(e.published_v == 0.49967);
  CHECK(e.tensor.scenario() == Scenario(3, 3, 4));
  CHECK(find_entry(catalog(), "V_555^2").published_bound == 13180);
}

}  // TEST_SUITE
