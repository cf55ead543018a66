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

#ifndef WSTACK_SELFMAPS_HPP
#define WSTACK_SELFMAPS_HPP

#include <string_view>
#include <vector>

#include "wstack/binform.hpp"

namespace wstack {

/// Rational self-map [X : Y] -> [F : G] of P^1 with deg F = deg G = n.
class RatSelfMap {
   public:
    RatSelfMap(unsigned n, BinForm F, BinForm G);

    unsigned n() const noexcept { return n_; }
    const BinForm& F() const noexcept { return F_; }
    const BinForm& G() const noexcept { return G_; }
    const Field& field() const noexcept { return F_.field(); }
    /// Resultant(F, G) != 0.
    bool is_morphism() const noexcept { return morphism_; }
    std::string to_string() const;

    friend bool operator==(const RatSelfMap& a, const RatSelfMap& b) noexcept {
        return a.n_ == b.n_ && a.F_ == b.F_ && a.G_ == b.G_;
    }

   private:
    unsigned n_;
    BinForm F_, G_;
    bool morphism_;
};

RatSelfMap parse_selfmap(const Field& f, unsigned n, const std::string& F, const std::string& G);

/// Y F - X G, of degree n + 1. Throws IdentityMap when it vanishes.
BinForm fix_divisor(const RatSelfMap& m);

/// Monic Wronskian dF/dX dG/dY - dF/dY dG/dX, of degree 2n - 2. Throws
/// WildRamification when it vanishes identically.
BinForm crit_divisor(const RatSelfMap& m);

/// g . m = g o m o g^{-1}: substitute g^{-1} into F and G, then apply g to
/// the pair of values.
RatSelfMap conjugate_action(const RatSelfMap& m, const Moebius& g);

enum class SelfMapTameness { TameFinite, NotGuaranteed, OutOfRegime };
std::string_view selfmap_tameness_name(SelfMapTameness t) noexcept;

/// TameFinite iff Fix * Crit has at least three geometric points whose
/// multiplicity is prime to the characteristic. Outside char = 0 or
/// char > n the answer is OutOfRegime. Throws NotMorphism.
SelfMapTameness selfmap_tameness(const RatSelfMap& m);

/// Every g in PGL_2(F_q) with g . m proportional to m, in pgl2_enumerate
/// order.
std::vector<Moebius> selfmap_stabilizer(const RatSelfMap& m, unsigned workers = 0);

}  // namespace wstack

#endif  // WSTACK_SELFMAPS_HPP
