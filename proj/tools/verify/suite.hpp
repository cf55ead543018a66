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

#ifndef WSTACK_TOOLS_SUITE_HPP
#define WSTACK_TOOLS_SUITE_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wstack/binform.hpp"
#include "wstack/counting.hpp"

namespace wstack::verify {

inline constexpr int kCriterionCount = 11;

struct SuiteOptions {
    unsigned workers = 0;
    /// Factorization splitting seed; random instances use a fixed seed.
    std::uint64_t seed = kDefaultSeed;
    /// Criteria to run; empty means all.
    std::vector<int> criteria;
};

struct CriterionResult {
    int id;
    std::string title;
    bool passed;
    std::string summary;
    /// Deterministic record of what was checked; compared against goldens.
    nlohmann::json evidence;
    double seconds;
};

class Suite {
   public:
    explicit Suite(SuiteOptions opt);

    CriterionResult run(int id);
    /// Runs the selected criteria in order, calling `done` after each.
    std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& done = {});

    static std::string title(int id);

   private:
    const std::array<mpz_class, 4>& weierstrass_labels_q5();

    nlohmann::json stable_count(bool& ok);
    nlohmann::json hom_count(bool& ok);
    nlohmann::json bound_chain(bool& ok);
    nlohmann::json level_13(bool& ok);
    nlohmann::json self_maps(bool& ok);
    nlohmann::json motive_identities(bool& ok);
    nlohmann::json git_properties(bool& ok);
    nlohmann::json extremal_fixtures(bool& ok);
    nlohmann::json fiber_surveys(bool& ok);
    nlohmann::json fat_points(bool& ok);
    nlohmann::json oracle_equivalence(bool& ok);

    SuiteOptions opt_;
    CountOptions count_opt_;
    std::optional<std::array<mpz_class, 4>> labels_q5_;
};

/// "criterion 01 PASS  <title>  <summary>"
std::string result_line(const CriterionResult& r);

/// Golden file name for a criterion: criterion_01.json etc.
std::string golden_name(int id);

}  // namespace wstack::verify

#endif  // WSTACK_TOOLS_SUITE_HPP
