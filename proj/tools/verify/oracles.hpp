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

#ifndef WSTACK_TOOLS_ORACLES_HPP
#define WSTACK_TOOLS_ORACLES_HPP

#include <random>
#include <vector>

#include "wstack/homstack.hpp"
#include "wstack/weierstrass.hpp"

namespace wstack::verify {

/// Direct point enumeration over P^1(F_{p^k}) for every k <= max_degree.
/// Only the maximal k (those with no multiple <= max_degree) are stored,
/// since F_{p^j} sits inside F_{p^k} when j divides k.
class PointOracle {
   public:
    PointOracle(std::uint64_t p, unsigned max_degree);

    /// Some point where every nonzero coordinate vanishes.
    bool has_common_zero(const HomTuple& t) const;
    /// Per-point threshold test on orders of vanishing.
    GitClass git_class(const HomTuple& t) const;
    /// Label from orders of vanishing of A and B at every point.
    StratumLabel weierstrass_label(const WeierstrassDatum& w) const;

   private:
    struct Level {
        Field field;
        std::vector<ProjPoint> points;
    };
    template <typename Visit>
    bool any_common_zero(const std::vector<BinForm>& forms, Visit&& visit) const;

    std::vector<Level> levels_;
};

/// Random tuple; `degenerate` plants a shared root of random depth and
/// sometimes zeroes a coordinate.
HomTuple sample_tuple(const Field& f, const WeightVector& lam, unsigned n, std::mt19937_64& rng, bool degenerate);

/// Random Weierstrass datum with Delta != 0.
WeierstrassDatum sample_datum(const Field& f, unsigned n, std::mt19937_64& rng, bool degenerate);

Moebius sample_moebius(const Field& f, std::mt19937_64& rng);

}  // namespace wstack::verify

#endif  // WSTACK_TOOLS_ORACLES_HPP
