// Copyright 2026-present the vidrec project
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

#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vidrec::csv {

/// Streaming RFC 4180 reader: quoted fields, doubled quotes, embedded
/// newlines, CRLF or LF line ends. A leading UTF-8 BOM is skipped.
class Reader {
 public:
  explicit Reader(std::istream& in);

  /// Next record, or nullopt at end of input. Throws Error(kFormat) on an
  /// unterminated quoted field.
  std::optional<std::vector<std::string>> next();

  /// 1-based line on which the most recently returned record started.
  std::size_t record_line() const { return record_line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 1;
  std::size_t record_line_ = 0;
  bool first_ = true;
};

/// Quotes a field only when it contains a separator, quote or line break.
std::string escape_field(std::string_view field);

std::vector<std::vector<std::string>> parse_all(std::istream& in);

}  // namespace vidrec::csv
