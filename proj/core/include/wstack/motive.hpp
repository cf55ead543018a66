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

#ifndef WSTACK_MOTIVE_HPP
#define WSTACK_MOTIVE_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "wstack/homstack.hpp"

namespace wstack {

/// Polynomial in L with integer coefficients, low to high, no trailing zeros.
class ZPoly {
   public:
    ZPoly() = default;
    explicit ZPoly(std::vector<mpz_class> coeffs);
    static ZPoly constant(const mpz_class& c);
    static ZPoly monomial(unsigned k, const mpz_class& c = 1);
    /// 1 + L + ... + L^k
    static ZPoly geometric(unsigned k, unsigned step = 1);

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    const mpz_class& leading() const { return c_.back(); }
    /// gcd of the coefficients, nonnegative.
    mpz_class content() const;
    mpz_class eval(const mpz_class& x) const;
    /// L-descending, e.g. "L^11 - L^9", "2*L^2 + 1", "0".
    std::string to_string() const;

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    /// Quotient when b divides a in Z[L]; throws Inconsistent otherwise.
    friend ZPoly exact_quotient(const ZPoly& a, const ZPoly& b);
    /// Primitive gcd with positive leading coefficient.
    friend ZPoly primitive_gcd(const ZPoly& a, const ZPoly& b);

   private:
    void trim();
    std::vector<mpz_class> c_;
};

/// Reduced fraction num/den of polynomials in the Lefschetz class L: the
/// gcd is removed, the contents are coprime and den has a positive leading
/// coefficient, so equal classes have equal representations.
class MotiveExpr {
   public:
    MotiveExpr() : num_(), den_(ZPoly::constant(1)) {}
    MotiveExpr(ZPoly num, ZPoly den);
    explicit MotiveExpr(ZPoly poly) : MotiveExpr(std::move(poly), ZPoly::constant(1)) {}
    static MotiveExpr integer(long v) { return MotiveExpr(ZPoly::constant(v)); }
    static MotiveExpr L(unsigned k = 1) { return MotiveExpr(ZPoly::monomial(k)); }

    const ZPoly& num() const noexcept { return num_; }
    const ZPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0 && den_.leading() == 1; }
    /// "L^8" for polynomials, "(num)/(den)" otherwise.
    std::string to_string() const;

    friend MotiveExpr operator+(const MotiveExpr& a, const MotiveExpr& b);
    friend MotiveExpr operator-(const MotiveExpr& a, const MotiveExpr& b);
    friend MotiveExpr operator*(const MotiveExpr& a, const MotiveExpr& b);
    /// Throws ZeroDivision when b is zero.
    friend MotiveExpr operator/(const MotiveExpr& a, const MotiveExpr& b);
    friend bool operator==(const MotiveExpr& a, const MotiveExpr& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const MotiveExpr& a, const MotiveExpr& b) { return !(a == b); }

   private:
    ZPoly num_, den_;
};

enum class MotiveOp { Add, Sub, Mul, Div };
MotiveExpr mexpr_arith(const MotiveExpr& a, const MotiveExpr& b, MotiveOp op);

/// Value at L = q as an exact rational. Throws Pole.
mpq_class specialize(const MotiveExpr& e, long q);

/// Expansion at L = infinity: returns the first `terms` coefficients of
/// L^top, L^{top-1}, ... where top = deg num - deg den.
struct LaurentExpansion {
    int top;
    std::vector<mpq_class> coeffs;
};
LaurentExpansion laurent_at_infinity(const MotiveExpr& e, unsigned terms);

enum class GroupName { GL, SL2, PGL2, Gm };
/// {GL_d} = prod_{i<d} (L^d - L^i); {SL_2} = {PGL_2} = L^3 - L; {G_m} = L - 1.
MotiveExpr motive_group(GroupName g, unsigned d = 2);
/// Classifying stack of PGL_2: 1 / (L^3 - L).
MotiveExpr motive_bpgl2();

/// (1 + L + ... + L^N)(L^{|lambda| n} - L^{|lambda| n - N}).
MotiveExpr motive_hom(const WeightVector& lam, unsigned n);

/// Closed form of {Hom} / {PGL_2} as a product of geometric series.
MotiveExpr motive_moduli_closed_form(const WeightVector& lam, unsigned n);

struct MotiveResult {
    MotiveExpr value;
    /// The identity is proven only for odd n (moduli) or even n (self-maps);
    /// outside that range the value is the same formula, reported but not
    /// asserted.
    bool empirical;
};

/// {Hom} / {PGL_2}; throws Inconsistent if it disagrees with the closed form.
MotiveResult motive_moduli(const WeightVector& lam, unsigned n);

/// (L^{|lambda| n + N + 1} - 1) / (L (L - 1) (L^2 - 1)).
MotiveExpr motive_ambient(const WeightVector& lam, unsigned n);

/// L^{2n - 2}; empirical for odd n.
MotiveResult motive_selfmap_moduli(unsigned n);

/// "num/den" with den > 0, e.g. "390625/1".
std::string rational_string(const mpq_class& v);
/// Inverse of rational_string; also accepts a bare integer.
mpq_class parse_rational(std::string_view text);

}  // namespace wstack

#endif  // WSTACK_MOTIVE_HPP
