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

#include "wstack/ffield.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace wstack {

namespace {

using Digits = std::vector<std::uint64_t>;

// ---- dense polynomials over F_p, low to high, used for modulus search ----

void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits pmod(Digits a, const Digits& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;  // m is monic
    while (a.size() > dm) {
        std::uint64_t c = a.back();
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < dm; ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i] % p) % p;
        a.pop_back();
        trim(a);
    }
    return a;
}

Digits pmulmod(const Digits& a, const Digits& b, const Digits& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Digits r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return pmod(std::move(r), m, p);
}

Digits ppowmod(Digits base, std::uint64_t e, const Digits& m, std::uint64_t p) {
    Digits r{1};
    base = pmod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = pmulmod(r, base, m, p);
        base = pmulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t qq = r / nr;
        t = t - qq * nt;
        std::swap(t, nt);
        r = r - qq * nr;
        std::swap(r, nr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

Digits pgcd(Digits a, Digits b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        std::uint64_t li = inv_mod(b.back(), p);
        for (auto& c : b) c = c * li % p;
        a = pmod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Rabin's test for a monic f of degree k over F_p.
bool is_irreducible(const Digits& f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    Digits x{0, 1};
    auto frob_power = [&](std::size_t e) {
        Digits h = x;
        for (std::size_t i = 0; i < e; ++i) h = ppowmod(h, p, f, p);
        return h;
    };
    Digits full = frob_power(k);
    full.resize(std::max<std::size_t>(full.size(), 2), 0);
    full[1] = (full[1] + p - 1) % p;
    trim(full);
    if (!full.empty()) return false;
    for (std::uint64_t r : prime_factors(k)) {
        Digits h = frob_power(k / r);
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = (h[1] + p - 1) % p;
        Digits g = pgcd(f, h, p);
        if (g.size() != 1) return false;
    }
    return true;
}

Digits decode(const detail::FieldData& d, Rep a) {
    Digits out(d.k, 0);
    std::uint64_t v = a;
    for (unsigned i = 0; i < d.k; ++i) {
        out[i] = v % d.p;
        v /= d.p;
    }
    return out;
}

Rep encode(const detail::FieldData& d, const Digits& digits) {
    std::uint64_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * d.p + digits[i];
    return static_cast<Rep>(v);
}

void build_tables(detail::FieldData& d) {
    const std::uint64_t m = d.q - 1;
    auto factors = prime_factors(m);
    auto spow = [&](Rep a, std::uint64_t e) {
        Rep r = 1;
        while (e) {
            if (e & 1) r = d.slow_mul(r, a);
            a = d.slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    Rep g = 0;
    for (Rep cand = 2; cand < d.q; ++cand) {
        bool primitive = std::all_of(factors.begin(), factors.end(),
                                     [&](std::uint64_t r) { return spow(cand, m / r) != 1; });
        if (primitive) {
            g = cand;
            break;
        }
    }
    d.exp.assign(2 * m, 0);
    d.log.assign(d.q, 0);
    Rep cur = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        d.exp[i] = cur;
        d.exp[i + m] = cur;
        d.log[cur] = static_cast<std::uint32_t>(i);
        cur = d.slow_mul(cur, g);
    }
    d.onep.assign(m, 0);
    for (std::uint64_t i = 0; i < m; ++i) d.onep[i] = d.slow_add(1, d.exp[i]);
    d.tables = true;
}

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

std::unique_ptr<detail::FieldData> construct(std::uint64_t p, unsigned k) {
    auto d = std::make_unique<detail::FieldData>();
    d->p = p;
    d->k = k;
    d->q = 1;
    for (unsigned i = 0; i < k; ++i) d->q *= p;
    if (k == 1) {
        d->modulus = {0, 1};
        return d;
    }
    // Scan t^k + (digits of m) in increasing m.
    for (std::uint64_t code = 0; code < d->q; ++code) {
        Digits f(k + 1, 0);
        std::uint64_t v = code;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = v % p;
            v /= p;
        }
        f[k] = 1;
        if (is_irreducible(f, p)) {
            d->modulus.assign(f.begin(), f.end());
            break;
        }
    }
    if (d->q <= kTableLimit) build_tables(*d);
    return d;
}

}  // namespace

namespace detail {

Rep FieldData::slow_add(Rep a, Rep b) const noexcept {
    Digits x = decode(*this, a), y = decode(*this, b);
    for (unsigned i = 0; i < k; ++i) x[i] = (x[i] + y[i]) % p;
    return encode(*this, x);
}

Rep FieldData::slow_neg(Rep a) const noexcept {
    Digits x = decode(*this, a);
    for (auto& c : x) c = (p - c) % p;
    return encode(*this, x);
}

Rep FieldData::slow_mul(Rep a, Rep b) const noexcept {
    Digits x = decode(*this, a), y = decode(*this, b);
    Digits m(modulus.begin(), modulus.end());
    Digits r = pmulmod(x, y, m, p);
    r.resize(k, 0);
    return encode(*this, r);
}

}  // namespace detail

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field make_field(std::uint64_t p, unsigned k, std::uint64_t bound) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q > bound / p) throw Error(ErrorCode::BoundExceeded, "field order exceeds enumeration bound");
        q *= p;
    }
    if (q > bound) throw Error(ErrorCode::BoundExceeded, "field order exceeds enumeration bound");

    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<detail::FieldData>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[{p, k}];
    if (!slot) slot = construct(p, k);
    return Field(slot.get());
}

Field parse_field(const std::string& text) {
    auto parse_u64 = [&](std::string_view s) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw Error(ErrorCode::Parse, "cannot parse field '" + text + "'");
        return v;
    };
    std::string_view sv(text);
    auto caret = sv.find('^');
    if (caret == std::string_view::npos) return make_field(parse_u64(sv), 1);
    std::uint64_t p = parse_u64(sv.substr(0, caret));
    std::uint64_t k = parse_u64(sv.substr(caret + 1));
    return make_field(p, static_cast<unsigned>(k));
}

Rep Field::inv(Rep a) const {
    if (a == 0) throw Error(ErrorCode::ZeroDivision, "inverse of zero");
    if (d_->k == 1) return static_cast<Rep>(inv_mod(a, d_->p));
    if (d_->tables) return d_->exp[(d_->q - 1) - d_->log[a]];
    return pow(a, d_->q - 2);
}

Rep Field::pow(Rep a, std::uint64_t e) const noexcept {
    if (d_->tables && a != 0) {
        const std::uint64_t m = d_->q - 1;
        return d_->exp[(d_->log[a] * (e % m)) % m];
    }
    Rep r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Rep Field::from_int(std::int64_t v) const noexcept {
    std::int64_t p = static_cast<std::int64_t>(d_->p);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<Rep>(r);
}

Rep Field::pth_root(Rep a) const noexcept {
    // x -> x^p is an automorphism of order k, so its inverse is x -> x^{p^{k-1}}.
    Rep r = a;
    for (unsigned i = 1; i < d_->k; ++i) r = pow(r, d_->p);
    return r;
}

bool Field::is_square(Rep a) const noexcept {
    if (a == 0 || d_->p == 2) return true;
    return pow(a, (d_->q - 1) / 2) == 1;
}

std::optional<Rep> Field::nth_root(Rep a, unsigned e) const {
    if (e == 0) {
        if (a == 1) return Rep{1};
        return std::nullopt;
    }
    if (a == 0) return Rep{0};
    const std::uint64_t m = d_->q - 1;
    const std::uint64_t g = std::gcd<std::uint64_t>(e, m);
    if (pow(a, m / g) != 1) return std::nullopt;
    if (g == 1) return pow(a, inv_mod(e % m, m));
    for (std::uint64_t r = 1; r < d_->q; ++r)
        if (pow(static_cast<Rep>(r), e) == a) return static_cast<Rep>(r);
    return std::nullopt;
}

std::uint64_t Field::mult_order(Rep a) const {
    if (a == 0) throw Error(ErrorCode::ZeroDivision, "order of zero");
    std::uint64_t ord = d_->q - 1;
    for (std::uint64_t r : prime_factors(d_->q - 1)) {
        while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
    }
    return ord;
}

FieldElem Field::elem(Rep r) const {
    if (r >= d_->q) throw Error(ErrorCode::InvalidArgument, "representation out of range");
    return FieldElem(*this, r);
}
FieldElem Field::zero() const { return FieldElem(*this, 0); }
FieldElem Field::one() const { return FieldElem(*this, 1); }

std::string Field::name() const {
    std::string s = "F_" + std::to_string(d_->p);
    if (d_->k > 1) s += "^" + std::to_string(d_->k);
    return s;
}

namespace {
void check_same(const FieldElem& a, const FieldElem& b) {
    if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "elements of different fields");
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return {a.field_, a.field_.add(a.rep_, b.rep_)};
}
FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return {a.field_, a.field_.sub(a.rep_, b.rep_)};
}
FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return {a.field_, a.field_.mul(a.rep_, b.rep_)};
}
FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return {a.field_, a.field_.div(a.rep_, b.rep_)};
}

FieldElem elem_inv(const FieldElem& x) { return x.inverse(); }

std::vector<FieldElem> field_enumerate(const Field& f, std::uint64_t bound) {
    if (f.order() > bound) throw Error(ErrorCode::BoundExceeded, "field too large to enumerate");
    std::vector<FieldElem> out;
    out.reserve(f.order());
    for (std::uint64_t r = 0; r < f.order(); ++r) out.emplace_back(f, static_cast<Rep>(r));
    return out;
}

}  // namespace wstack
