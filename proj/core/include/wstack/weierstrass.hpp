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

#ifndef WSTACK_WEIERSTRASS_HPP
#define WSTACK_WEIERSTRASS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "wstack/binform.hpp"
#include "wstack/homstack.hpp"

namespace wstack {

/// 4A^3 + 27B^2 for forms of degrees (4n, 6n). This is the discriminant of
/// y^2 = x^3 + Ax + B up to the unit -16, which changes no order of vanishing
/// in characteristic >= 5. Throws DegreeMismatch or UnsupportedCharacteristic.
BinForm discriminant(const BinForm& A, const BinForm& B);

/// Weierstrass data (A, B) of degrees (4n, 6n), (A, B) != (0, 0), over a
/// field of characteristic at least 5.
class WeierstrassDatum {
   public:
    WeierstrassDatum(unsigned n, BinForm A, BinForm B);

    unsigned n() const noexcept { return n_; }
    const BinForm& A() const noexcept { return A_; }
    const BinForm& B() const noexcept { return B_; }
    const BinForm& discriminant() const noexcept { return delta_; }
    const Field& field() const noexcept { return A_.field(); }
    /// The point [A : B] of the weighted projective stack P(4, 6).
    HomTuple as_tuple() const;

   private:
    unsigned n_;
    BinForm A_, B_, delta_;
};

WeierstrassDatum parse_weierstrass(const Field& f, unsigned n, const std::string& a, const std::string& b);

enum class StratumLabel { DiscriminantZero, DeltaOnly, MinNotSf, Sf };
std::string_view stratum_label_name(StratumLabel s) noexcept;

/// Sf: A and B have no common zero. MinNotSf: no point with ord A >= 4 and
/// ord B >= 6. DeltaOnly: such a point exists but the discriminant is a
/// nonzero form.
StratumLabel stratum_classify(const WeierstrassDatum& w);

struct Minimalization {
    WeierstrassDatum datum;
    /// A = U^4 A', B = U^6 B'; monic, of degree n - n'.
    BinForm U;
};

/// Removes every point where ord A >= 4 and ord B >= 6 by dividing out
/// the maximal U. Throws DiscriminantZero, or NonFibration when nothing of
/// positive degree would remain.
Minimalization minimalize(const WeierstrassDatum& w);

struct KodairaFiber {
    enum class Kind { I0, In, II, III, IV, I0Star, InStar, IVStar, IIIStar, IIStar, NonMinimal };
    Kind kind;
    /// The m of I_m and I_m^*, 0 otherwise.
    unsigned m = 0;

    /// "I0", "I3", "II", "I0*", "I2*", "IV*", "NON_MINIMAL", ...
    std::string name() const;
    bool is_multiplicative_or_smooth() const noexcept { return kind == Kind::I0 || kind == Kind::In; }
    bool is_additive() const noexcept { return !is_multiplicative_or_smooth() && kind != Kind::NonMinimal; }

    friend bool operator==(const KodairaFiber& a, const KodairaFiber& b) noexcept {
        return a.kind == b.kind && a.m == b.m;
    }
};

/// Fiber type from (ord A, ord B, ord Delta) in characteristic >= 5;
/// kInfiniteOrder stands for a zero form. Throws Inconsistent for triples
/// that cannot occur.
KodairaFiber kodaira_from_orders(unsigned a, unsigned b, unsigned delta);

/// Fiber over a rational point. Throws DiscriminantZero.
KodairaFiber kodaira_at(const WeierstrassDatum& w, const ProjPoint& pt);

struct FiberEntry {
    /// Monic irreducible factor of the discriminant (the closed point).
    BinForm point;
    unsigned degree;
    unsigned ord_a, ord_b, ord_delta;
    KodairaFiber fiber;
};

/// One entry per closed point with a singular fiber, in factorization order.
std::vector<FiberEntry> fiber_survey(const WeierstrassDatum& w, std::uint64_t seed = kDefaultSeed);

}  // namespace wstack

#endif  // WSTACK_WEIERSTRASS_HPP
