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

#ifndef WSTACK_FFIELD_HPP
#define WSTACK_FFIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wstack/error.hpp"

namespace wstack {

/// Canonical residue representation of a field element.
///
/// For F_p this is the residue in [0, p). For F_{p^k} = F_p[t]/(m(t)) it is
/// the base-p integer sum d_i p^i of the coefficient digits of the reduced
/// polynomial sum d_i t^i. Enumeration order is increasing Rep, so every
/// field enumerates as 0, 1, ...
using Rep = std::uint32_t;

inline constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t{1} << 28;

namespace detail {

struct FieldData {
    std::uint64_t p = 0;
    unsigned k = 0;
    std::uint64_t q = 0;
    std::vector<Rep> modulus;
    // Log tables for extension fields of moderate size; exp has 2(q-1)
    // entries so a sum of two logs needs no reduction. onep[i] = 1 + g^i.
    bool tables = false;
    std::vector<Rep> exp;
    std::vector<std::uint32_t> log;
    std::vector<Rep> onep;

    Rep slow_add(Rep a, Rep b) const noexcept;
    Rep slow_neg(Rep a) const noexcept;
    Rep slow_mul(Rep a, Rep b) const noexcept;
};

}  // namespace detail

class FieldElem;

/// Handle to an immutable finite field F_{p^k}.
///
/// Fields are interned: make_field(p, k) returns handles to one shared
/// description that lives for the rest of the process, so copying a Field is
/// a pointer copy and two handles compare equal iff (p, k) agree.
class Field {
   public:
    std::uint64_t characteristic() const noexcept;
    unsigned degree() const noexcept;
    std::uint64_t order() const noexcept;
    /// Monic modulus coefficients m_0..m_k (low to high). For k = 1 this is t.
    const std::vector<Rep>& modulus() const noexcept;

    Rep zero_rep() const noexcept { return 0; }
    Rep one_rep() const noexcept { return 1; }

    Rep add(Rep a, Rep b) const noexcept;
    Rep sub(Rep a, Rep b) const noexcept;
    Rep neg(Rep a) const noexcept;
    Rep mul(Rep a, Rep b) const noexcept;
    Rep inv(Rep a) const;  // throws ZeroDivision
    Rep div(Rep a, Rep b) const { return mul(a, inv(b)); }
    Rep pow(Rep a, std::uint64_t e) const noexcept;
    /// Image of an integer under Z -> F_p -> F_q.
    Rep from_int(std::int64_t v) const noexcept;
    /// Unique x with x^p = a (the field is perfect).
    Rep pth_root(Rep a) const noexcept;
    bool is_square(Rep a) const noexcept;
    /// Some x with x^e = a, if one exists in this field.
    std::optional<Rep> nth_root(Rep a, unsigned e) const;
    /// Multiplicative order of a nonzero element.
    std::uint64_t mult_order(Rep a) const;

    FieldElem elem(Rep r) const;
    FieldElem zero() const;
    FieldElem one() const;

    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.d_ == b.d_; }
    friend bool operator!=(const Field& a, const Field& b) noexcept { return a.d_ != b.d_; }

   private:
    explicit Field(const detail::FieldData* d) : d_(d) {}
    friend Field make_field(std::uint64_t, unsigned, std::uint64_t);

    const detail::FieldData* d_;
};

/// Builds F_{p^k}. The modulus is the smallest monic irreducible of degree k
/// when monic polynomials t^k + sum_{i<k} c_i t^i are ordered by the integer
/// sum_{i<k} c_i p^i. Throws NotPrime, InvalidArgument (k = 0) or
/// BoundExceeded (p^k > bound).
Field make_field(std::uint64_t p, unsigned k = 1, std::uint64_t bound = kDefaultEnumerationBound);

/// Parses "p" or "p^k". A bare integer must be prime: "25" is rejected, "5^2" is F_25.
Field parse_field(const std::string& text);

bool is_prime(std::uint64_t n) noexcept;

/// Value type pairing a field handle with a canonical representative.
class FieldElem {
   public:
    FieldElem(Field f, Rep r) : field_(f), rep_(r) {}

    const Field& field() const noexcept { return field_; }
    Rep rep() const noexcept { return rep_; }
    bool is_zero() const noexcept { return rep_ == 0; }
    bool is_one() const noexcept { return rep_ == 1; }

    FieldElem operator-() const { return {field_, field_.neg(rep_)}; }
    FieldElem pow(std::uint64_t e) const { return {field_, field_.pow(rep_, e)}; }
    FieldElem inverse() const { return {field_, field_.inv(rep_)}; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
        return a.field_ == b.field_ && a.rep_ == b.rep_;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) noexcept { return !(a == b); }

   private:
    Field field_;
    Rep rep_;
};

FieldElem elem_inv(const FieldElem& x);

/// All p^k elements in canonical order. Throws BoundExceeded when the order
/// is above `bound`.
std::vector<FieldElem> field_enumerate(const Field& f, std::uint64_t bound = kDefaultEnumerationBound);

inline std::uint64_t Field::characteristic() const noexcept { return d_->p; }
inline unsigned Field::degree() const noexcept { return d_->k; }
inline std::uint64_t Field::order() const noexcept { return d_->q; }
inline const std::vector<Rep>& Field::modulus() const noexcept { return d_->modulus; }

inline Rep Field::add(Rep a, Rep b) const noexcept {
    if (d_->k == 1) {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Rep>(s >= d_->p ? s - d_->p : s);
    }
    if (d_->tables) {
        if (a == 0) return b;
        if (b == 0) return a;
        const std::uint64_t m = d_->q - 1;
        std::uint64_t la = d_->log[a], lb = d_->log[b];
        Rep z = d_->onep[(lb + m - la) % m];
        if (z == 0) return 0;
        return d_->exp[la + d_->log[z]];
    }
    return d_->slow_add(a, b);
}

inline Rep Field::neg(Rep a) const noexcept {
    if (a == 0) return 0;
    if (d_->k == 1) return static_cast<Rep>(d_->p - a);
    return d_->slow_neg(a);
}

inline Rep Field::sub(Rep a, Rep b) const noexcept { return add(a, neg(b)); }

inline Rep Field::mul(Rep a, Rep b) const noexcept {
    if (d_->k == 1) return static_cast<Rep>((std::uint64_t{a} * b) % d_->p);
    if (a == 0 || b == 0) return 0;
    if (d_->tables) return d_->exp[std::uint64_t{d_->log[a]} + d_->log[b]];
    return d_->slow_mul(a, b);
}

}  // namespace wstack

#endif  // WSTACK_FFIELD_HPP
