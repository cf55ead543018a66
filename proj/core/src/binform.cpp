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

#include "wstack/binform.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>
#include <sstream>

namespace wstack {

namespace {

// Dense univariate polynomials over a Field, low to high, no trailing zeros.
using Poly = std::vector<Rep>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly padd(const Field& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    trim(r);
    return r;
}

Poly psub(const Field& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    trim(r);
    return r;
}

Poly pmul(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

// a = q b + r with deg r < deg b; b nonzero.
void pdivmod(const Field& F, Poly a, const Poly& b, Poly* quo, Poly* rem) {
    trim(a);
    const int db = deg(b);
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const Rep li = F.inv(b.back());
    while (deg(a) >= db) {
        const std::size_t shift = a.size() - b.size();
        const Rep c = F.mul(a.back(), li);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
        a.pop_back();
        trim(a);
    }
    if (quo) {
        trim(q);
        *quo = std::move(q);
    }
    if (rem) *rem = std::move(a);
}

Poly pmod(const Field& F, const Poly& a, const Poly& b) {
    Poly r;
    pdivmod(F, a, b, nullptr, &r);
    return r;
}

Poly pquo(const Field& F, const Poly& a, const Poly& b) {
    Poly q;
    pdivmod(F, a, b, &q, nullptr);
    return q;
}

Poly pmonic(const Field& F, Poly a) {
    if (a.empty()) return a;
    const Rep li = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, li);
    return a;
}

Poly pgcd(const Field& F, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = pmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(F, std::move(a));
}

Poly pderiv(const Field& F, const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1, 0);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], F.from_int(static_cast<std::int64_t>(i)));
    trim(r);
    return r;
}

Poly pmulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m) { return pmod(F, pmul(F, a, b), m); }

Poly ppowmod(const Field& F, Poly base, std::uint64_t e, const Poly& m) {
    Poly r{1};
    r = pmod(F, r, m);
    base = pmod(F, base, m);
    while (e) {
        if (e & 1) r = pmulmod(F, r, base, m);
        e >>= 1;
        if (e) base = pmulmod(F, base, base, m);
    }
    return r;
}

// f has only exponents divisible by p; returns the p-th root.
Poly ppth_root(const Field& F, const Poly& f) {
    const std::uint64_t p = F.characteristic();
    Poly r(f.empty() ? 0 : (f.size() - 1) / p + 1, 0);
    for (std::size_t i = 0; i < f.size(); i += p) r[i / p] = F.pth_root(f[i]);
    trim(r);
    return r;
}

using SqfList = std::vector<std::pair<Poly, unsigned>>;

// Squarefree decomposition of a monic polynomial in characteristic p.
SqfList psquarefree(const Field& F, const Poly& f) {
    SqfList out;
    if (deg(f) <= 0) return out;
    const unsigned p = static_cast<unsigned>(F.characteristic());
    Poly fp = pderiv(F, f);
    if (fp.empty()) {
        for (auto& [g, m] : psquarefree(F, ppth_root(F, f))) out.emplace_back(std::move(g), m * p);
        return out;
    }
    Poly c = pgcd(F, f, fp);
    Poly w = pquo(F, f, c);
    unsigned i = 1;
    while (deg(w) > 0) {
        Poly y = pgcd(F, w, c);
        Poly z = pquo(F, w, y);
        if (deg(z) > 0) out.emplace_back(pmonic(F, z), i);
        ++i;
        w = std::move(y);
        c = pquo(F, c, w);
    }
    if (deg(c) > 0) {
        for (auto& [g, m] : psquarefree(F, pmonic(F, ppth_root(F, pmonic(F, c))))) out.emplace_back(std::move(g), m * p);
    }
    return out;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<Poly, unsigned>> pddf(const Field& F, Poly f) {
    std::vector<std::pair<Poly, unsigned>> out;
    const Poly x{0, 1};
    Poly h = pmod(F, x, f);
    unsigned i = 1;
    while (deg(f) >= 2 * static_cast<int>(i)) {
        h = ppowmod(F, h, F.order(), f);
        Poly g = pgcd(F, f, psub(F, h, x));
        if (deg(g) > 0) {
            f = pquo(F, f, g);
            h = pmod(F, h, f);
            out.emplace_back(std::move(g), i);
        }
        ++i;
    }
    if (deg(f) > 0) out.emplace_back(pmonic(F, f), static_cast<unsigned>(deg(f)));
    return out;
}

// Equal-degree splitting of a monic squarefree f whose irreducible factors
// all have degree d.
void pedf(const Field& F, const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const int n = deg(f);
    if (n <= static_cast<int>(d)) {
        out.push_back(f);
        return;
    }
    const std::uint64_t q = F.order();
    std::uniform_int_distribution<std::uint64_t> coeff(0, q - 1);
    for (;;) {
        Poly a(n, 0);
        for (auto& c : a) c = static_cast<Rep>(coeff(rng));
        trim(a);
        if (deg(a) <= 0) continue;
        Poly b;
        if (q % 2 == 1) {
            // a^{(q^d - 1)/2} = (a^{1 + q + ... + q^{d-1}})^{(q-1)/2}
            Poly norm{1};
            Poly frob = a;
            for (unsigned j = 0; j < d; ++j) {
                norm = pmulmod(F, norm, frob, f);
                if (j + 1 < d) frob = ppowmod(F, frob, q, f);
            }
            b = ppowmod(F, norm, (q - 1) / 2, f);
            b = psub(F, b, Poly{1});
        } else {
            // Absolute trace to F_2: a + a^2 + a^4 + ... + a^{2^{kd-1}}.
            const unsigned steps = F.degree() * d;
            Poly t = pmod(F, a, f);
            Poly sq = t;
            for (unsigned j = 1; j < steps; ++j) {
                sq = pmulmod(F, sq, sq, f);
                t = padd(F, t, sq);
            }
            b = t;
        }
        Poly g = pgcd(F, f, b);
        if (deg(g) > 0 && deg(g) < n) {
            pedf(F, g, d, rng, out);
            pedf(F, pmonic(F, pquo(F, f, g)), d, rng, out);
            return;
        }
    }
}

Poly dehomogenize(const BinForm& f) {
    Poly a(f.coeffs().begin(), f.coeffs().end());
    trim(a);
    return a;
}

BinForm homogenize(const Field& F, const Poly& a, unsigned degree) {
    std::vector<Rep> c(degree + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    return BinForm(F, degree, std::move(c));
}

BinForm y_form(const Field& F) { return BinForm::linear(F, 0, 1); }

void check_field(const Field& a, const Field& b) {
    if (a != b) throw Error(ErrorCode::FieldMismatch, "forms over different fields");
}

void sort_factors(std::vector<FactorPower>& v) {
    std::sort(v.begin(), v.end(), [](const FactorPower& a, const FactorPower& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        if (a.factor != b.factor) return a.factor < b.factor;
        return a.multiplicity < b.multiplicity;
    });
}

}  // namespace

// ---------------------------------------------------------------- BinForm

BinForm::BinForm(Field f, unsigned degree) : field_(f), coeffs_(degree + 1, 0) {}

BinForm::BinForm(Field f, unsigned degree, std::vector<Rep> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != std::size_t{degree} + 1)
        throw Error(ErrorCode::DegreeMismatch, "form of degree " + std::to_string(degree) + " needs " +
                                                   std::to_string(degree + 1) + " coefficients");
    for (Rep c : coeffs_)
        if (c >= f.order()) throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
}

BinForm BinForm::from_ints(Field f, const std::vector<std::int64_t>& coeffs) {
    if (coeffs.empty()) throw Error(ErrorCode::DegreeMismatch, "a form needs at least one coefficient");
    std::vector<Rep> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(f.from_int(v));
    const auto d = static_cast<unsigned>(c.size() - 1);
    return BinForm(f, d, std::move(c));
}

BinForm BinForm::monomial(Field f, unsigned x_power, unsigned y_power, Rep c) {
    BinForm r(f, x_power + y_power);
    r.coeffs_[x_power] = c;
    return r;
}

BinForm BinForm::constant(Field f, Rep c) { return BinForm(f, 0, {c}); }

BinForm BinForm::linear(Field f, Rep a, Rep b) { return BinForm(f, 1, {b, a}); }

bool BinForm::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Rep c) { return c == 0; });
}

unsigned BinForm::x_degree() const noexcept {
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        if (coeffs_[i] != 0) return static_cast<unsigned>(i);
    return 0;
}

BinForm BinForm::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
}

BinForm BinForm::scaled(Rep c) const {
    BinForm r = *this;
    for (auto& v : r.coeffs_) v = field_.mul(v, c);
    return r;
}

BinForm BinForm::pow(unsigned e) const {
    BinForm r = BinForm::constant(field_, 1);
    BinForm b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::string BinForm::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const unsigned d = degree();
    for (unsigned i = d + 1; i-- > 0;) {
        Rep c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        const unsigned j = d - i;
        bool mono = false;
        std::ostringstream m;
        if (i > 0) {
            m << "X";
            if (i > 1) m << "^" << i;
            mono = true;
        }
        if (j > 0) {
            if (mono) m << "*";
            m << "Y";
            if (j > 1) m << "^" << j;
            mono = true;
        }
        if (!mono) {
            os << c;
        } else if (c == 1) {
            os << m.str();
        } else {
            os << c << "*" << m.str();
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BinForm& f) { return os << f.to_string(); }

std::string BinForm::coeff_list() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coeffs_[i]);
    }
    return s;
}

BinForm operator*(const BinForm& a, const BinForm& b) {
    check_field(a.field_, b.field_);
    const Field& F = a.field_;
    BinForm r(F, a.degree() + b.degree());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] = F.add(r.coeffs_[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return r;
}

BinForm operator+(const BinForm& a, const BinForm& b) {
    check_field(a.field_, b.field_);
    if (a.degree() != b.degree()) throw Error(ErrorCode::DegreeMismatch, "sum of forms of different degree");
    BinForm r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.field_.add(r.coeffs_[i], b.coeffs_[i]);
    return r;
}

BinForm operator-(const BinForm& a, const BinForm& b) {
    check_field(a.field_, b.field_);
    if (a.degree() != b.degree()) throw Error(ErrorCode::DegreeMismatch, "difference of forms of different degree");
    BinForm r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.field_.sub(r.coeffs_[i], b.coeffs_[i]);
    return r;
}

bool operator<(const BinForm& a, const BinForm& b) noexcept {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    return a.coeffs_ < b.coeffs_;
}

BinForm parse_form(const Field& f, const std::string& text) {
    std::vector<std::int64_t> vals;
    std::string_view sv(text);
    while (true) {
        auto comma = sv.find(',');
        std::string_view tok = sv.substr(0, comma);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw Error(ErrorCode::Parse, "cannot parse coefficient list '" + text + "'");
        vals.push_back(v);
        if (comma == std::string_view::npos) break;
        sv.remove_prefix(comma + 1);
    }
    if (f.degree() > 1) {
        for (auto v : vals)
            if (v < 0 || static_cast<std::uint64_t>(v) >= f.order())
                throw Error(ErrorCode::Parse, "extension field coefficients must be representations in [0, q)");
        std::vector<Rep> c(vals.begin(), vals.end());
        const auto d = static_cast<unsigned>(c.size() - 1);
        return BinForm(f, d, std::move(c));
    }
    return BinForm::from_ints(f, vals);
}

bool proportional(const BinForm& a, const BinForm& b) {
    if (a.field() != b.field() || a.degree() != b.degree()) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.monic() == b.monic();
}

std::optional<BinForm> try_divide(const BinForm& a, const BinForm& b) {
    check_field(a.field(), b.field());
    if (b.is_zero()) throw Error(ErrorCode::ZeroDivision, "division by the zero form");
    if (b.degree() > a.degree()) return std::nullopt;
    const unsigned d = a.degree() - b.degree();
    if (a.is_zero()) return BinForm(a.field(), d);
    if (a.y_multiplicity() < b.y_multiplicity()) return std::nullopt;
    Poly q, r;
    pdivmod(a.field(), dehomogenize(a), dehomogenize(b), &q, &r);
    if (!r.empty()) return std::nullopt;
    if (deg(q) > static_cast<int>(d)) return std::nullopt;
    return homogenize(a.field(), q, d);
}

BinForm exact_divide(const BinForm& a, const BinForm& b) {
    auto q = try_divide(a, b);
    if (!q) throw Error(ErrorCode::InvalidArgument, "form is not divisible");
    return *q;
}

// --------------------------------------------------------------- ProjPoint

ProjPoint ProjPoint::from_coords(Field f, Rep x, Rep y) {
    if (y != 0) return ProjPoint(f, f.div(x, y), 1);
    if (x == 0) throw Error(ErrorCode::InvalidArgument, "[0:0] is not a point");
    return ProjPoint(f, 1, 0);
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const Moebius& g) { return os << g.to_string(); }

std::string ProjPoint::to_string() const {
    return "[" + std::to_string(x_) + ":" + std::to_string(y_) + "]";
}

std::vector<ProjPoint> projective_line(const Field& f) {
    std::vector<ProjPoint> out;
    out.reserve(f.order() + 1);
    for (std::uint64_t x = 0; x < f.order(); ++x) out.push_back(ProjPoint::affine(f, static_cast<Rep>(x)));
    out.push_back(ProjPoint::infinity(f));
    return out;
}

// ----------------------------------------------------------------- Moebius

Moebius Moebius::make(Field f, Rep a, Rep b, Rep c, Rep d) {
    if (f.sub(f.mul(a, d), f.mul(b, c)) == 0) throw Error(ErrorCode::InvalidArgument, "singular matrix");
    Rep e[4] = {a, b, c, d};
    Rep lead = 0;
    for (Rep v : e)
        if (v != 0) {
            lead = v;
            break;
        }
    Rep li = f.inv(lead);
    return Moebius(f, f.mul(a, li), f.mul(b, li), f.mul(c, li), f.mul(d, li));
}

Moebius Moebius::inverse() const {
    const Field& F = field_;
    return make(F, e_[3], F.neg(e_[1]), F.neg(e_[2]), e_[0]);
}

ProjPoint Moebius::apply(const ProjPoint& p) const {
    const Field& F = field_;
    Rep x = F.add(F.mul(e_[0], p.x()), F.mul(e_[1], p.y()));
    Rep y = F.add(F.mul(e_[2], p.x()), F.mul(e_[3], p.y()));
    return ProjPoint::from_coords(F, x, y);
}

std::string Moebius::to_string() const {
    return "[[" + std::to_string(e_[0]) + "," + std::to_string(e_[1]) + "],[" + std::to_string(e_[2]) + "," +
           std::to_string(e_[3]) + "]]";
}

Moebius operator*(const Moebius& g, const Moebius& h) {
    check_field(g.field_, h.field_);
    const Field& F = g.field_;
    auto dot = [&](Rep x1, Rep y1, Rep x2, Rep y2) { return F.add(F.mul(x1, x2), F.mul(y1, y2)); };
    return Moebius::make(F, dot(g.e_[0], g.e_[1], h.e_[0], h.e_[2]), dot(g.e_[0], g.e_[1], h.e_[1], h.e_[3]),
                         dot(g.e_[2], g.e_[3], h.e_[0], h.e_[2]), dot(g.e_[2], g.e_[3], h.e_[1], h.e_[3]));
}

bool operator<(const Moebius& a, const Moebius& b) noexcept {
    return std::lexicographical_compare(a.e_, a.e_ + 4, b.e_, b.e_ + 4);
}

std::vector<Moebius> pgl2_enumerate(const Field& f, std::uint64_t bound) {
    const std::uint64_t q = f.order();
    if (q > 1024 || q * q * q > bound) throw Error(ErrorCode::BoundExceeded, "PGL_2 too large to enumerate");
    std::vector<Moebius> out;
    out.reserve(q * q * q - q);
    for (std::uint64_t b = 0; b < q; ++b)
        for (std::uint64_t c = 0; c < q; ++c)
            for (std::uint64_t d = 0; d < q; ++d) {
                Rep det = f.sub(static_cast<Rep>(d), f.mul(static_cast<Rep>(b), static_cast<Rep>(c)));
                if (det != 0) out.push_back(Moebius::make(f, 1, static_cast<Rep>(b), static_cast<Rep>(c), static_cast<Rep>(d)));
            }
    for (std::uint64_t c = 1; c < q; ++c)
        for (std::uint64_t d = 0; d < q; ++d) out.push_back(Moebius::make(f, 0, 1, static_cast<Rep>(c), static_cast<Rep>(d)));
    return out;
}

// ------------------------------------------------------------ Factorization

BinForm Factorization::expand() const {
    const Field& F = unit.field();
    BinForm r = BinForm::constant(F, unit.rep());
    for (const auto& fp : factors) r = r * fp.factor.pow(fp.multiplicity);
    return r;
}

unsigned Factorization::support_size() const {
    unsigned s = 0;
    for (const auto& fp : factors) s += fp.factor.degree();
    return s;
}

// -------------------------------------------------------------- operations

FieldElem bf_eval(const BinForm& f, const ProjPoint& pt) {
    check_field(f.field(), pt.field());
    const Field& F = f.field();
    if (pt.is_infinity()) return F.elem(f.coeffs().back());
    Rep acc = 0;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, pt.x()), c[i]);
    return F.elem(acc);
}

BinForm bf_substitute(const BinForm& f, Rep a, Rep b, Rep c, Rep d) {
    const Field& F = f.field();
    const unsigned n = f.degree();
    // Powers of L1 = aX + bY and L2 = cX + dY.
    std::vector<BinForm> p1{BinForm::constant(F, 1)}, p2{BinForm::constant(F, 1)};
    const BinForm l1 = BinForm::linear(F, a, b), l2 = BinForm::linear(F, c, d);
    for (unsigned i = 1; i <= n; ++i) {
        p1.push_back(p1.back() * l1);
        p2.push_back(p2.back() * l2);
    }
    BinForm r(F, n);
    for (unsigned i = 0; i <= n; ++i) {
        if (f.coeffs()[i] == 0) continue;
        r = r + (p1[i] * p2[n - i]).scaled(f.coeffs()[i]);
    }
    return r;
}

BinForm bf_substitute(const BinForm& f, const Moebius& g) {
    check_field(f.field(), g.field());
    return bf_substitute(f, g.a(), g.b(), g.c(), g.d());
}

BinForm bf_gcd(const BinForm& f, const BinForm& g) {
    check_field(f.field(), g.field());
    if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::ZeroForm, "gcd of two zero forms");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    Poly h = pgcd(f.field(), dehomogenize(f), dehomogenize(g));
    const unsigned ey = std::min(f.y_multiplicity(), g.y_multiplicity());
    return homogenize(f.field(), h, static_cast<unsigned>(deg(h)) + ey);
}

FieldElem bf_resultant(const BinForm& f, const BinForm& g) {
    check_field(f.field(), g.field());
    const Field& F = f.field();
    const unsigned m = f.degree(), n = g.degree();
    const unsigned size = m + n;
    if (size == 0) return F.one();
    // Rows hold coefficients from X^{top} down to Y^{top}.
    std::vector<std::vector<Rep>> M(size, std::vector<Rep>(size, 0));
    for (unsigned r = 0; r < n; ++r)
        for (unsigned j = 0; j <= m; ++j) M[r][r + j] = f.coeffs()[m - j];
    for (unsigned r = 0; r < m; ++r)
        for (unsigned j = 0; j <= n; ++j) M[n + r][r + j] = g.coeffs()[n - j];
    Rep det = 1;
    for (unsigned col = 0; col < size; ++col) {
        unsigned piv = col;
        while (piv < size && M[piv][col] == 0) ++piv;
        if (piv == size) return F.zero();
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = F.neg(det);
        }
        det = F.mul(det, M[col][col]);
        const Rep inv = F.inv(M[col][col]);
        for (unsigned r = col + 1; r < size; ++r) {
            if (M[r][col] == 0) continue;
            const Rep factor = F.mul(M[r][col], inv);
            for (unsigned c = col; c < size; ++c) M[r][c] = F.sub(M[r][c], F.mul(factor, M[col][c]));
        }
    }
    return F.elem(det);
}

unsigned bf_ord_at(const BinForm& f, const ProjPoint& pt) {
    check_field(f.field(), pt.field());
    if (f.is_zero()) return kInfiniteOrder;
    if (pt.is_infinity()) return f.y_multiplicity();
    const Field& F = f.field();
    Poly a = dehomogenize(f);
    unsigned ord = 0;
    // Synthetic division by (x - x0) while the remainder vanishes.
    while (a.size() > 1) {
        Poly q(a.size() - 1, 0);
        Rep acc = 0;
        for (std::size_t i = a.size(); i-- > 1;) {
            acc = F.add(F.mul(acc, pt.x()), a[i]);
            q[i - 1] = acc;
        }
        Rep rem = F.add(F.mul(acc, pt.x()), a[0]);
        if (rem != 0) break;
        ++ord;
        a = std::move(q);
    }
    return ord;
}

unsigned bf_factor_multiplicity(const BinForm& f, const BinForm& g) {
    check_field(f.field(), g.field());
    if (f.is_zero()) return kInfiniteOrder;
    if (g.degree() == 0) throw Error(ErrorCode::InvalidArgument, "multiplicity of a unit");
    unsigned m = 0;
    BinForm cur = f;
    while (cur.degree() >= g.degree()) {
        auto q = try_divide(cur, g);
        if (!q) break;
        ++m;
        cur = std::move(*q);
    }
    return m;
}

Factorization bf_squarefree(const BinForm& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroForm, "squarefree decomposition of the zero form");
    const Field& F = f.field();
    Factorization out{F.elem(f.leading()), {}};
    Poly a = pmonic(F, dehomogenize(f));
    std::map<unsigned, BinForm> groups;
    for (auto& [g, m] : psquarefree(F, a)) {
        BinForm gf = homogenize(F, g, static_cast<unsigned>(deg(g)));
        auto it = groups.find(m);
        if (it == groups.end()) groups.emplace(m, gf);
        else it->second = it->second * gf;
    }
    if (unsigned ey = f.y_multiplicity(); ey > 0) {
        auto it = groups.find(ey);
        if (it == groups.end()) groups.emplace(ey, y_form(F));
        else it->second = it->second * y_form(F);
    }
    for (auto& [m, g] : groups) out.factors.push_back({g, m});
    return out;
}

Factorization bf_factor(const BinForm& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroForm, "factorization of the zero form");
    const Field& F = f.field();
    Factorization out{F.elem(f.leading()), {}};
    std::mt19937_64 rng(seed);
    Poly a = pmonic(F, dehomogenize(f));
    for (auto& [g, m] : psquarefree(F, a)) {
        for (auto& [h, d] : pddf(F, g)) {
            std::vector<Poly> pieces;
            pedf(F, h, d, rng, pieces);
            for (auto& piece : pieces) out.factors.push_back({homogenize(F, piece, d), m});
        }
    }
    if (unsigned ey = f.y_multiplicity(); ey > 0) out.factors.push_back({y_form(F), ey});
    sort_factors(out.factors);
    return out;
}

BinForm bf_radical_ge(const BinForm& f, unsigned m) {
    Factorization s = bf_squarefree(f);
    BinForm r = BinForm::constant(f.field(), 1);
    for (const auto& fp : s.factors)
        if (fp.multiplicity >= m) r = r * fp.factor;
    return r;
}

BinForm bf_partial(const BinForm& f, Var var) {
    const Field& F = f.field();
    const unsigned d = f.degree();
    if (d == 0) return BinForm(F, 0);
    BinForm r(F, d - 1);
    std::vector<Rep> c(d, 0);
    for (unsigned i = 0; i <= d; ++i) {
        const Rep v = f.coeffs()[i];
        if (v == 0) continue;
        if (var == Var::X && i > 0) c[i - 1] = F.mul(v, F.from_int(i));
        if (var == Var::Y && i < d) c[i] = F.mul(v, F.from_int(static_cast<std::int64_t>(d - i)));
    }
    return BinForm(F, d - 1, std::move(c));
}

std::optional<BinForm> bf_perfect_root(const BinForm& f, unsigned e) {
    if (e == 0) throw Error(ErrorCode::InvalidArgument, "zeroth root");
    if (f.degree() % e != 0) return std::nullopt;
    if (f.is_zero()) return BinForm(f.field(), f.degree() / e);
    const Field& F = f.field();
    auto s = bf_squarefree(f);
    auto scalar = F.nth_root(s.unit.rep(), e);
    if (!scalar) return std::nullopt;
    BinForm r = BinForm::constant(F, *scalar);
    for (const auto& fp : s.factors) {
        if (fp.multiplicity % e != 0) return std::nullopt;
        r = r * fp.factor.pow(fp.multiplicity / e);
    }
    return r;
}

unsigned bf_distinct_roots(const BinForm& f) { return bf_squarefree(f).support_size(); }

}  // namespace wstack
