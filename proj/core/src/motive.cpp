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

#include "wstack/motive.hpp"

#include <algorithm>

namespace wstack {

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::constant(const mpz_class& c) { return ZPoly(std::vector<mpz_class>{c}); }

ZPoly ZPoly::monomial(unsigned k, const mpz_class& c) {
    std::vector<mpz_class> v(k + 1, 0);
    v[k] = c;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::geometric(unsigned k, unsigned step) {
    if (step == 0) throw Error(ErrorCode::InvalidArgument, "geometric series step must be positive");
    std::vector<mpz_class> v(k + 1, 0);
    for (unsigned i = 0; i <= k; i += step) v[i] = 1;
    return ZPoly(std::move(v));
}

mpz_class ZPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

mpz_class ZPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string ZPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        mpz_class c = c_[i];
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        mpz_class a = abs(c);
        if (i == 0) {
            s += a.get_str();
            continue;
        }
        if (a != 1) s += a.get_str() + "*";
        s += "L";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return ZPoly(std::move(v));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return ZPoly(std::move(v));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return ZPoly(std::move(v));
}

ZPoly exact_quotient(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroDivision, "polynomial division by zero");
    std::vector<mpz_class> r = a.c_;
    if (a.degree() < b.degree()) {
        if (a.is_zero()) return ZPoly();
        throw Error(ErrorCode::Inconsistent, "inexact polynomial division");
    }
    std::vector<mpz_class> q(a.c_.size() - b.c_.size() + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        const mpz_class& top = r[k + b.c_.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t()))
            throw Error(ErrorCode::Inconsistent, "inexact polynomial division");
        mpz_class c = top / b.leading();
        q[k] = c;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= c * b.c_[j];
    }
    for (const auto& v : r)
        if (v != 0) throw Error(ErrorCode::Inconsistent, "inexact polynomial division");
    return ZPoly(std::move(q));
}

namespace {

ZPoly primitive_part(const ZPoly& a) {
    if (a.is_zero()) return a;
    mpz_class c = a.content();
    if (a.leading() < 0) c = -c;
    std::vector<mpz_class> v = a.coeffs();
    for (auto& x : v) x /= c;
    return ZPoly(std::move(v));
}

// Pseudo-remainder of a by b: lc(b)^k a mod b.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const int shift = a.degree() - b.degree();
        a = a * ZPoly::constant(b.leading()) - ZPoly::monomial(static_cast<unsigned>(shift), a.leading()) * b;
        a = primitive_part(a);
    }
    return a;
}

}  // namespace

ZPoly primitive_gcd(const ZPoly& a0, const ZPoly& b0) {
    ZPoly a = primitive_part(a0), b = primitive_part(b0);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return primitive_part(a);
}

MotiveExpr::MotiveExpr(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorCode::ZeroDivision, "motive with zero denominator");
    if (num_.is_zero()) {
        den_ = ZPoly::constant(1);
        return;
    }
    ZPoly g = primitive_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
    }
    mpz_class c;
    mpz_class cn = num_.content(), cd = den_.content();
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.leading() < 0) c = -c;
    if (c != 1) {
        num_ = exact_quotient(num_, ZPoly::constant(c));
        den_ = exact_quotient(den_, ZPoly::constant(c));
    }
}

std::string MotiveExpr::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

MotiveExpr operator+(const MotiveExpr& a, const MotiveExpr& b) {
    return MotiveExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

MotiveExpr operator-(const MotiveExpr& a, const MotiveExpr& b) {
    return MotiveExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

MotiveExpr operator*(const MotiveExpr& a, const MotiveExpr& b) { return MotiveExpr(a.num_ * b.num_, a.den_ * b.den_); }

MotiveExpr operator/(const MotiveExpr& a, const MotiveExpr& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroDivision, "division by the zero class");
    return MotiveExpr(a.num_ * b.den_, a.den_ * b.num_);
}

MotiveExpr mexpr_arith(const MotiveExpr& a, const MotiveExpr& b, MotiveOp op) {
    switch (op) {
        case MotiveOp::Add: return a + b;
        case MotiveOp::Sub: return a - b;
        case MotiveOp::Mul: return a * b;
        case MotiveOp::Div: return a / b;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown operation");
}

mpq_class specialize(const MotiveExpr& e, long q) {
    const mpz_class x = q;
    const mpz_class d = e.den().eval(x);
    if (d == 0) throw Error(ErrorCode::Pole, "the class " + e.to_string() + " has a pole at L = " + std::to_string(q));
    mpq_class r(e.num().eval(x), d);
    r.canonicalize();
    return r;
}

LaurentExpansion laurent_at_infinity(const MotiveExpr& e, unsigned terms) {
    LaurentExpansion out{0, {}};
    if (e.is_zero()) {
        out.coeffs.assign(terms, 0);
        return out;
    }
    const auto& n = e.num().coeffs();
    const auto& d = e.den().coeffs();
    out.top = e.num().degree() - e.den().degree();
    // With t = 1/L: num = L^dn * N(t), den = L^dd * D(t), N and D reversed.
    auto rev = [](const std::vector<mpz_class>& v, std::size_t i) -> mpq_class {
        return i < v.size() ? mpq_class(v[v.size() - 1 - i]) : mpq_class(0);
    };
    std::vector<mpq_class> s;
    for (unsigned k = 0; k < terms; ++k) {
        mpq_class acc = rev(n, k);
        for (unsigned j = 1; j <= k; ++j) acc -= rev(d, j) * s[k - j];
        acc /= rev(d, 0);
        s.push_back(acc);
    }
    out.coeffs = std::move(s);
    return out;
}

MotiveExpr motive_group(GroupName g, unsigned d) {
    switch (g) {
        case GroupName::GL: {
            if (d == 0) throw Error(ErrorCode::InvalidArgument, "GL_0 is not a group of interest");
            ZPoly p = ZPoly::constant(1);
            for (unsigned i = 0; i < d; ++i) p = p * (ZPoly::monomial(d) - ZPoly::monomial(i));
            return MotiveExpr(p);
        }
        case GroupName::SL2:
        case GroupName::PGL2: return MotiveExpr(ZPoly::monomial(3) - ZPoly::monomial(1));
        case GroupName::Gm: return MotiveExpr(ZPoly::monomial(1) - ZPoly::constant(1));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown group");
}

MotiveExpr motive_bpgl2() { return MotiveExpr::integer(1) / motive_group(GroupName::PGL2); }

MotiveExpr motive_hom(const WeightVector& lam, unsigned n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "degree n must be positive");
    const unsigned N = lam.top_index();
    const unsigned top = lam.total() * n;
    return MotiveExpr(ZPoly::geometric(N) * (ZPoly::monomial(top) - ZPoly::monomial(top - N)));
}

MotiveExpr motive_moduli_closed_form(const WeightVector& lam, unsigned n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "degree n must be positive");
    const unsigned N = lam.top_index();
    const unsigned shift = lam.total() * n - N - 1;
    ZPoly p = ZPoly::monomial(shift);
    if (N % 2 == 1) {
        p = p * ZPoly::geometric(N - 1, 2) * ZPoly::geometric(N - 1);
    } else {
        p = p * ZPoly::geometric(N) * ZPoly::geometric(N - 2, 2);
    }
    return MotiveExpr(p);
}

MotiveResult motive_moduli(const WeightVector& lam, unsigned n) {
    MotiveExpr q = motive_hom(lam, n) / motive_group(GroupName::PGL2);
    if (q != motive_moduli_closed_form(lam, n))
        throw Error(ErrorCode::Inconsistent, "{Hom}/{PGL_2} = " + q.to_string() + " disagrees with the closed form " +
                                                 motive_moduli_closed_form(lam, n).to_string());
    return {q, n % 2 == 0};
}

MotiveExpr motive_ambient(const WeightVector& lam, unsigned n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "degree n must be positive");
    const unsigned top = lam.total() * n + lam.top_index() + 1;
    ZPoly den = ZPoly::monomial(1) * (ZPoly::monomial(1) - ZPoly::constant(1)) *
                (ZPoly::monomial(2) - ZPoly::constant(1));
    return MotiveExpr(ZPoly::monomial(top) - ZPoly::constant(1), den);
}

MotiveResult motive_selfmap_moduli(unsigned n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "degree n must be positive");
    return {MotiveExpr::L(2 * n - 2), n % 2 == 1};
}

std::string rational_string(const mpq_class& v) {
    mpq_class c = v;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class parse_rational(std::string_view text) {
    std::string s(text);
    mpq_class r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw Error(ErrorCode::Parse, "cannot parse rational '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace wstack
