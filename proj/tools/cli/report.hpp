/*
   Copyright 2026 The wstack Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WSTACK_TOOLS_REPORT_HPP
#define WSTACK_TOOLS_REPORT_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wstack/counting.hpp"

namespace wstack::cli {

enum class Format { Json, Csv, Text };

Format parse_format(std::string_view text);

/// Keys sorted, counts as decimal strings, rationals as "num/den". The
/// wall_time key is present only when `timing` is set.
nlohmann::json report_to_json(const CountReport& r, bool timing = false);
CountReport report_from_json(const nlohmann::json& j);

/// One report as an object, a batch as an array; CSV and text produce one
/// row or block per report, so an empty batch is a header or nothing.
std::string emit_reports(const std::vector<CountReport>& reports, Format format, bool timing = false);

/// JSON with two-space indent and a trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace wstack::cli

#endif  // WSTACK_TOOLS_REPORT_HPP
