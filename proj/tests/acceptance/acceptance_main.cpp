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

// Runs every acceptance criterion and compares its evidence with the golden
// record. Prints one PASS/FAIL line per criterion; exits nonzero on any FAIL.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "verify/suite.hpp"

namespace {

std::string golden_dir() {
    if (const char* d = std::getenv("WSTACK_GOLDEN_DIR")) return d;
    return WSTACK_GOLDEN_DIR;
}

std::optional<nlohmann::json> load_golden(int id) {
    std::ifstream is(golden_dir() + "/" + wstack::verify::golden_name(id));
    if (!is) return std::nullopt;
    return nlohmann::json::parse(is);
}

}  // namespace

int main(int argc, char** argv) {
    wstack::verify::SuiteOptions opt;
    for (int i = 1; i < argc; ++i) opt.criteria.push_back(std::atoi(argv[i]));
    wstack::verify::Suite suite(opt);
    int failures = 0;
    suite.run_all([&](const wstack::verify::CriterionResult& r) {
        wstack::verify::CriterionResult shown = r;
        const auto golden = load_golden(r.id);
        if (!golden) {
            shown.passed = false;
            shown.summary = "missing golden " + wstack::verify::golden_name(r.id);
        } else if (*golden != r.evidence) {
            shown.passed = false;
            shown.summary = "evidence differs from " + wstack::verify::golden_name(r.id) + "; " + r.summary;
        }
        if (!shown.passed) ++failures;
        std::ostringstream secs;
        secs.precision(1);
        secs << std::fixed << r.seconds;
        std::cout << wstack::verify::result_line(shown) << "  (" << secs.str() << " s)" << std::endl;
    });
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
