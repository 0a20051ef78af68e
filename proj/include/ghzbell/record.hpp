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

// Line-oriented record format for certified inequalities.
//
// One record per line, eight TAB-separated fields:
//
//   scenario     "mAxmBxmC"
//   coeffs       d integers separated by single spaces, i slowest, k fastest
//   L            local bound (nonnegative integer)
//   Q            quantum value, %.12g
//   v_crit       L / Q, %.12g
//   tight        "true" or "false"
//   digest       canonical-form digest, "-" when unknown
//   provenance   free text without TAB or newline
//
// Blank lines and lines starting with '#' are ignored by the readers.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghzbell/tensor.hpp"

namespace ghzbell {

struct InequalityRecord {
  IntTensor tensor{Scenario(2, 2, 2)};
  std::int64_t local_bound = 0;
  double quantum_value = 0.0;
  double v_crit = 0.0;
  bool tight = false;
  std::string digest = "-";
  std::string provenance;

  friend bool operator==(const InequalityRecord&,
                         const InequalityRecord&) = default;
};

/// Throws RecordError if a field would not survive the line format or if
/// v_crit disagrees with L / Q.
void validate(const InequalityRecord& r);

std::string format_record(const InequalityRecord& r);
InequalityRecord parse_record(std::string_view line);

void write_record(std::ostream& out, const InequalityRecord& r);

/// Next record, skipping comments and blank lines; nullopt at end of stream.
/// Error messages carry the 1-based line number tracked in `line_no`.
std::optional<InequalityRecord> read_record(std::istream& in, int& line_no);

std::vector<InequalityRecord> read_records(std::istream& in);
std::vector<InequalityRecord> load_records(const std::filesystem::path& path);
void save_records(const std::filesystem::path& path,
                  const std::vector<InequalityRecord>& records);

}  // namespace ghzbell
