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

#ifndef WSTACK_BINFORM_HPP
#define WSTACK_BINFORM_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wstack/ffield.hpp"

namespace wstack {

/// Homogeneous binary form sum_{i=0}^{d} c_i X^i Y^{d-i} of declared degree d.
///
/// The declared degree is part of the value: the zero form of degree 4 and
/// the zero form of degree 6 are different objects, and a form whose X^d
/// coefficient vanishes carries a factor Y ("the root at infinity").
class BinForm {
   public:
    /// Zero form of the given degree.
    BinForm(Field f, unsigned degree);
    /// coeffs.size() must be degree + 1 and every entry a valid Rep.
    BinForm(Field f, unsigned degree, std::vector<Rep> coeffs);

    /// Degree is coeffs.size() - 1; integers are reduced into the field.
    static BinForm from_ints(Field f, const std::vector<std::int64_t>& coeffs);
    static BinForm monomial(Field f, unsigned x_power, unsigned y_power, Rep c = 1);
    static BinForm constant(Field f, Rep c);
    /// a X + b Y
    static BinForm linear(Field f, Rep a, Rep b);

    const Field& field() const noexcept { return field_; }
    unsigned degree() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    const std::vector<Rep>& coeffs() const noexcept { return coeffs_; }
    Rep coeff(unsigned i) const { return coeffs_.at(i); }

    bool is_zero() const noexcept;
    /// Nonzero form of degree 0.
    bool is_unit() const noexcept { return coeffs_.size() == 1 && coeffs_[0] != 0; }
    /// Degree of f(x, 1). Undefined for the zero form.
    unsigned x_degree() const noexcept;
    /// Multiplicity of the factor Y, i.e. degree - x_degree.
    unsigned y_multiplicity() const noexcept { return degree() - x_degree(); }
    /// Coefficient of the highest X power present.
    Rep leading() const noexcept { return coeffs_[x_degree()]; }

    /// Scaled so that leading() == 1; the zero form is returned unchanged.
    BinForm monic() const;
    BinForm scaled(Rep c) const;
    BinForm pow(unsigned e) const;

    /// Readable polynomial, e.g. "X^2*Y + 3*Y^3"; "0" for the zero form.
    std::string to_string() const;
    /// Comma separated c_0,...,c_d as integers (representations).
    std::string coeff_list() const;

    friend BinForm operator*(const BinForm& a, const BinForm& b);
    friend BinForm operator+(const BinForm& a, const BinForm& b);
    friend BinForm operator-(const BinForm& a, const BinForm& b);
    friend bool operator==(const BinForm& a, const BinForm& b) noexcept {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BinForm& a, const BinForm& b) noexcept { return !(a == b); }
    friend bool operator<(const BinForm& a, const BinForm& b) noexcept;

   private:
    Field field_;
    std::vector<Rep> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const BinForm& f);

/// Parses "c_0,c_1,...,c_d" (X-ascending, integers reduced mod p; for
/// extension fields each entry is a Rep).
BinForm parse_form(const Field& f, const std::string& text);

/// True iff a = c * b for some nonzero scalar c (both nonzero, same degree).
bool proportional(const BinForm& a, const BinForm& b);
/// a / b when b divides a exactly.
std::optional<BinForm> try_divide(const BinForm& a, const BinForm& b);
BinForm exact_divide(const BinForm& a, const BinForm& b);

/// Point of P^1 in normal form: [x : 1] or [1 : 0].
class ProjPoint {
   public:
    static ProjPoint affine(Field f, Rep x) { return ProjPoint(f, x, 1); }
    static ProjPoint infinity(Field f) { return ProjPoint(f, 1, 0); }
    static ProjPoint from_coords(Field f, Rep x, Rep y);

    const Field& field() const noexcept { return field_; }
    Rep x() const noexcept { return x_; }
    Rep y() const noexcept { return y_; }
    bool is_infinity() const noexcept { return y_ == 0; }
    std::string to_string() const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) noexcept {
        return a.field_ == b.field_ && a.x_ == b.x_ && a.y_ == b.y_;
    }

   private:
    ProjPoint(Field f, Rep x, Rep y) : field_(f), x_(x), y_(y) {}
    Field field_;
    Rep x_, y_;
};

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);

/// Affine points in canonical element order, then infinity.
std::vector<ProjPoint> projective_line(const Field& f);

/// Element of PGL_2 stored with its first nonzero entry equal to 1, so that
/// group equality is representation equality. Acts on coordinates by
/// [X : Y] -> [aX + bY : cX + dY].
class Moebius {
   public:
    static Moebius make(Field f, Rep a, Rep b, Rep c, Rep d);
    static Moebius identity(Field f) { return make(f, 1, 0, 0, 1); }
    static Moebius swap(Field f) { return make(f, 0, 1, 1, 0); }
    static Moebius diag(Field f, Rep lambda) { return make(f, lambda, 0, 0, 1); }

    const Field& field() const noexcept { return field_; }
    Rep a() const noexcept { return e_[0]; }
    Rep b() const noexcept { return e_[1]; }
    Rep c() const noexcept { return e_[2]; }
    Rep d() const noexcept { return e_[3]; }

    Moebius inverse() const;
    ProjPoint apply(const ProjPoint& p) const;
    std::string to_string() const;

    /// Matrix product g h.
    friend Moebius operator*(const Moebius& g, const Moebius& h);
    friend bool operator==(const Moebius& a, const Moebius& b) noexcept {
        return a.field_ == b.field_ && a.e_[0] == b.e_[0] && a.e_[1] == b.e_[1] && a.e_[2] == b.e_[2] &&
               a.e_[3] == b.e_[3];
    }
    friend bool operator<(const Moebius& a, const Moebius& b) noexcept;

   private:
    Moebius(Field f, Rep a, Rep b, Rep c, Rep d) : field_(f), e_{a, b, c, d} {}
    Field field_;
    Rep e_[4];
};

std::ostream& operator<<(std::ostream& os, const Moebius& g);

/// All q^3 - q elements of PGL_2(F) in a fixed order.
std::vector<Moebius> pgl2_enumerate(const Field& f, std::uint64_t bound = std::uint64_t{1} << 24);

struct FactorPower {
    BinForm factor;
    unsigned multiplicity;
};

/// unit * prod factor^multiplicity. Factors are monic, pairwise distinct and
/// listed in a canonical order; the factor Y stands for the point at infinity.
struct Factorization {
    FieldElem unit;
    std::vector<FactorPower> factors;

    BinForm expand() const;
    /// Number of geometric points: sum of factor degrees.
    unsigned support_size() const;
};

inline constexpr unsigned kInfiniteOrder = std::numeric_limits<unsigned>::max();
inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

enum class Var { X, Y };

FieldElem bf_eval(const BinForm& f, const ProjPoint& pt);
/// f(aX + bY, cX + dY).
BinForm bf_substitute(const BinForm& f, const Moebius& g);
/// Same substitution for an arbitrary (not normalized) matrix.
BinForm bf_substitute(const BinForm& f, Rep a, Rep b, Rep c, Rep d);
/// Monic gcd including the common power of Y. gcd(0, g) = monic(g).
BinForm bf_gcd(const BinForm& f, const BinForm& g);
/// Sylvester determinant on the declared degrees.
FieldElem bf_resultant(const BinForm& f, const BinForm& g);
/// Multiplicity of pt as a root; kInfiniteOrder for the zero form.
unsigned bf_ord_at(const BinForm& f, const ProjPoint& pt);
/// Multiplicity of an irreducible monic factor g in f; kInfiniteOrder if f = 0.
unsigned bf_factor_multiplicity(const BinForm& f, const BinForm& g);
/// prod g_j^{m_j}, g_j squarefree and pairwise coprime, one entry per multiplicity.
Factorization bf_squarefree(const BinForm& f);
/// Complete factorization into monic irreducibles. `seed` only drives the
/// equal-degree splitting search; the result does not depend on it.
Factorization bf_factor(const BinForm& f, std::uint64_t seed = kDefaultSeed);
/// Squarefree product of the irreducible factors of multiplicity >= m.
BinForm bf_radical_ge(const BinForm& f, unsigned m);
BinForm bf_partial(const BinForm& f, Var var);
/// R with R^e = f, if such a form exists over the owner field.
std::optional<BinForm> bf_perfect_root(const BinForm& f, unsigned e);
/// Number of distinct geometric roots of a nonzero form.
unsigned bf_distinct_roots(const BinForm& f);

}  // namespace wstack

#endif  // WSTACK_BINFORM_HPP
