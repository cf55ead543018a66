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

#include "wstack/weierstrass.hpp"

#include <algorithm>

namespace wstack {

namespace {

void check_characteristic(const Field& f) {
    const auto p = f.characteristic();
    if (p == 2 || p == 3)
        throw Error(ErrorCode::UnsupportedCharacteristic,
                    "Weierstrass data need characteristic at least 5, got " + std::to_string(p));
}

unsigned floor_div(unsigned v, unsigned d) { return v == kInfiniteOrder ? kInfiniteOrder : v / d; }

}  // namespace

BinForm discriminant(const BinForm& A, const BinForm& B) {
    if (A.field() != B.field()) throw Error(ErrorCode::FieldMismatch, "A and B over different fields");
    if (A.degree() % 4 != 0 || A.degree() == 0 || B.degree() * 2 != A.degree() * 3)
        throw Error(ErrorCode::DegreeMismatch, "Weierstrass data need degrees (4n, 6n), got (" +
                                                   std::to_string(A.degree()) + ", " + std::to_string(B.degree()) +
                                                   ")");
    check_characteristic(A.field());
    const Field& F = A.field();
    return A.pow(3).scaled(F.from_int(4)) + B.pow(2).scaled(F.from_int(27));
}

WeierstrassDatum::WeierstrassDatum(unsigned n, BinForm A, BinForm B)
    : n_(n), A_(std::move(A)), B_(std::move(B)), delta_(A_.field(), 0) {
    if (n_ == 0) throw Error(ErrorCode::InvalidArgument, "degree n must be positive");
    if (A_.degree() != 4 * n_ || B_.degree() != 6 * n_)
        throw Error(ErrorCode::DegreeMismatch, "for n = " + std::to_string(n_) + " A needs degree " +
                                                   std::to_string(4 * n_) + " and B degree " + std::to_string(6 * n_));
    if (A_.is_zero() && B_.is_zero()) throw Error(ErrorCode::ZeroForm, "(A, B) = (0, 0)");
    delta_ = wstack::discriminant(A_, B_);
}

HomTuple WeierstrassDatum::as_tuple() const { return HomTuple(WeightVector({4, 6}), n_, {A_, B_}); }

WeierstrassDatum parse_weierstrass(const Field& f, unsigned n, const std::string& a, const std::string& b) {
    return WeierstrassDatum(n, parse_form(f, a), parse_form(f, b));
}

std::string_view stratum_label_name(StratumLabel s) noexcept {
    switch (s) {
        case StratumLabel::DiscriminantZero: return "DISCRIMINANT_ZERO";
        case StratumLabel::DeltaOnly: return "DELTA_ONLY";
        case StratumLabel::MinNotSf: return "MIN_NOT_SF";
        case StratumLabel::Sf: return "SF";
    }
    return "?";
}

StratumLabel stratum_classify(const WeierstrassDatum& w) {
    if (w.discriminant().is_zero()) return StratumLabel::DiscriminantZero;
    const BinForm& A = w.A();
    const BinForm& B = w.B();
    // Delta != 0 forces A, B not both zero; a zero coordinate vanishes everywhere.
    if (A.is_zero() || B.is_zero()) {
        // Every zero of the other coordinate is a common zero, so never Sf.
        const BinForm& other = A.is_zero() ? B : A;
        const unsigned need = A.is_zero() ? 6 : 4;
        return bf_radical_ge(other, need).degree() > 0 ? StratumLabel::DeltaOnly : StratumLabel::MinNotSf;
    }
    if (bf_gcd(A, B).degree() == 0) return StratumLabel::Sf;
    if (bf_gcd(bf_radical_ge(A, 4), bf_radical_ge(B, 6)).degree() == 0) return StratumLabel::MinNotSf;
    return StratumLabel::DeltaOnly;
}

Minimalization minimalize(const WeierstrassDatum& w) {
    if (w.discriminant().is_zero()) throw Error(ErrorCode::DiscriminantZero, "minimalization needs Delta != 0");
    const Field& F = w.field();
    const BinForm& base = w.A().is_zero() ? w.B() : w.A();
    BinForm U = BinForm::constant(F, 1);
    for (const auto& fp : bf_factor(base).factors) {
        const unsigned ea = floor_div(bf_factor_multiplicity(w.A(), fp.factor), 4);
        const unsigned eb = floor_div(bf_factor_multiplicity(w.B(), fp.factor), 6);
        const unsigned e = std::min(ea, eb);
        if (e > 0) U = U * fp.factor.pow(e);
    }
    const unsigned k = U.degree();
    if (k >= w.n())
        throw Error(ErrorCode::NonFibration, "removing non-minimal points leaves degree n' = " +
                                                 std::to_string(static_cast<int>(w.n()) - static_cast<int>(k)));
    if (k == 0) return {w, U};
    BinForm A2 = exact_divide(w.A(), U.pow(4));
    BinForm B2 = exact_divide(w.B(), U.pow(6));
    return {WeierstrassDatum(w.n() - k, std::move(A2), std::move(B2)), U};
}

std::string KodairaFiber::name() const {
    switch (kind) {
        case Kind::I0: return "I0";
        case Kind::In: return "I" + std::to_string(m);
        case Kind::II: return "II";
        case Kind::III: return "III";
        case Kind::IV: return "IV";
        case Kind::I0Star: return "I0*";
        case Kind::InStar: return "I" + std::to_string(m) + "*";
        case Kind::IVStar: return "IV*";
        case Kind::IIIStar: return "III*";
        case Kind::IIStar: return "II*";
        case Kind::NonMinimal: return "NON_MINIMAL";
    }
    return "?";
}

KodairaFiber kodaira_from_orders(unsigned a, unsigned b, unsigned delta) {
    using K = KodairaFiber::Kind;
    if (delta == kInfiniteOrder) throw Error(ErrorCode::DiscriminantZero, "fiber type needs Delta != 0");
    if (delta == 0) return {K::I0, 0};
    if (a >= 4 && b >= 6) return {K::NonMinimal, 0};
    if (a == 0) return {K::In, delta};
    if (b == 1 && delta == 2) return {K::II, 0};
    if (a == 1 && b >= 2 && delta == 3) return {K::III, 0};
    if (a >= 2 && b == 2 && delta == 4) return {K::IV, 0};
    if (a >= 2 && b >= 3 && delta == 6) return {K::I0Star, 0};
    if (a == 2 && b == 3 && delta > 6) return {K::InStar, delta - 6};
    if (a >= 3 && b == 4 && delta == 8) return {K::IVStar, 0};
    if (a == 3 && b >= 5 && delta == 9) return {K::IIIStar, 0};
    if (a >= 4 && b == 5 && delta == 10) return {K::IIStar, 0};
    auto show = [](unsigned v) { return v == kInfiniteOrder ? std::string("inf") : std::to_string(v); };
    throw Error(ErrorCode::Inconsistent, "impossible orders (ord A, ord B, ord Delta) = (" + show(a) + ", " +
                                             show(b) + ", " + show(delta) + ")");
}

KodairaFiber kodaira_at(const WeierstrassDatum& w, const ProjPoint& pt) {
    if (w.discriminant().is_zero()) throw Error(ErrorCode::DiscriminantZero, "fiber type needs Delta != 0");
    return kodaira_from_orders(bf_ord_at(w.A(), pt), bf_ord_at(w.B(), pt), bf_ord_at(w.discriminant(), pt));
}

std::vector<FiberEntry> fiber_survey(const WeierstrassDatum& w, std::uint64_t seed) {
    if (w.discriminant().is_zero()) throw Error(ErrorCode::DiscriminantZero, "fiber survey needs Delta != 0");
    std::vector<FiberEntry> out;
    for (const auto& fp : bf_factor(w.discriminant(), seed).factors) {
        const unsigned a = bf_factor_multiplicity(w.A(), fp.factor);
        const unsigned b = bf_factor_multiplicity(w.B(), fp.factor);
        out.push_back({fp.factor, fp.factor.degree(), a, b, fp.multiplicity, kodaira_from_orders(a, b, fp.multiplicity)});
    }
    return out;
}

}  // namespace wstack
