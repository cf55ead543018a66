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

#include "wstack/counting.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>

#include "wstack/parallel.hpp"
#include "wstack/selfmaps.hpp"
#include "wstack/weierstrass.hpp"

namespace wstack {

// ------------------------------------------------------------------ names

std::string_view model_kind_name(ModelKind k) noexcept {
    return k == ModelKind::HomWeighted ? "HOM_WEIGHTED" : "SELFMAP";
}

std::string_view stratum_name(Stratum s) noexcept {
    switch (s) {
        case Stratum::AllNonzero: return "ALL_NONZERO";
        case Stratum::BasepointFree: return "BASEPOINT_FREE";
        case Stratum::Morphism: return "MORPHISM";
        case Stratum::UDelta: return "U_DELTA";
        case Stratum::UMin: return "U_MIN";
        case Stratum::USf: return "U_SF";
        case Stratum::GitStable: return "GIT_STABLE";
        case Stratum::GitSemistable: return "GIT_SEMISTABLE";
    }
    return "?";
}

Stratum parse_stratum(std::string_view text) {
    std::string t(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    static const std::pair<const char*, Stratum> table[] = {
        {"ALL_NONZERO", Stratum::AllNonzero}, {"ALL", Stratum::AllNonzero},
        {"BASEPOINT_FREE", Stratum::BasepointFree}, {"BPF", Stratum::BasepointFree},
        {"HOM", Stratum::BasepointFree},      {"MORPHISM", Stratum::Morphism},
        {"U_DELTA", Stratum::UDelta},         {"DELTA", Stratum::UDelta},
        {"U_MIN", Stratum::UMin},             {"MIN", Stratum::UMin},
        {"U_SF", Stratum::USf},               {"SF", Stratum::USf},
        {"GIT_STABLE", Stratum::GitStable},   {"STABLE", Stratum::GitStable},
        {"GIT_SEMISTABLE", Stratum::GitSemistable}, {"SEMISTABLE", Stratum::GitSemistable},
    };
    for (const auto& [name, s] : table)
        if (t == name) return s;
    throw Error(ErrorCode::Parse, "unknown stratum '" + std::string(text) + "'");
}

std::string_view method_name(Method m) noexcept { return m == Method::Brute ? "BRUTE" : "SIEVE"; }

Method parse_method(std::string_view text) {
    std::string t(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (t == "BRUTE") return Method::Brute;
    if (t == "SIEVE") return Method::Sieve;
    throw Error(ErrorCode::Parse, "unknown method '" + std::string(text) + "'");
}

std::string_view group_kind_name(GroupKind g) noexcept {
    switch (g) {
        case GroupKind::GL2: return "GL2";
        case GroupKind::PGL2: return "PGL2";
        case GroupKind::Gm: return "Gm";
    }
    return "?";
}

// ------------------------------------------------------------------ models

CountModel CountModel::hom(WeightVector lam, unsigned n, Stratum s) {
    CountModel m{ModelKind::HomWeighted, std::move(lam), n, s};
    m.validate();
    return m;
}

CountModel CountModel::selfmap(unsigned n, Stratum s) {
    CountModel m{ModelKind::SelfMap, WeightVector({1, 1}), n, s};
    m.validate();
    return m;
}

std::vector<unsigned> CountModel::degrees() const {
    std::vector<unsigned> d;
    for (unsigned w : lam.weights()) d.push_back(n * w);
    return d;
}

unsigned CountModel::coefficient_count() const { return lam.coefficient_count(n); }

bool CountModel::is_weierstrass_shape() const { return kind == ModelKind::HomWeighted && lam == WeightVector({4, 6}); }

void CountModel::validate() const {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "degree n must be positive");
    if (kind == ModelKind::SelfMap) {
        if (!(lam == WeightVector({1, 1}))) throw Error(ErrorCode::InvalidArgument, "self-map models have weights (1,1)");
        if (stratum != Stratum::AllNonzero && stratum != Stratum::Morphism)
            throw Error(ErrorCode::InvalidArgument,
                        "stratum " + std::string(stratum_name(stratum)) + " does not apply to self-maps");
        return;
    }
    switch (stratum) {
        case Stratum::Morphism:
            throw Error(ErrorCode::InvalidArgument, "MORPHISM applies to self-maps; use BASEPOINT_FREE");
        case Stratum::UDelta:
        case Stratum::UMin:
        case Stratum::USf:
            if (!is_weierstrass_shape())
                throw Error(ErrorCode::InvalidArgument,
                            "stratum " + std::string(stratum_name(stratum)) + " needs weights (4,6)");
            break;
        default: break;
    }
}

void CountModel::validate_field(const Field& f) const {
    const bool weier = stratum == Stratum::UDelta || stratum == Stratum::UMin || stratum == Stratum::USf;
    if (weier && (f.characteristic() == 2 || f.characteristic() == 3))
        throw Error(ErrorCode::UnsupportedCharacteristic, "Weierstrass strata need characteristic at least 5");
}

std::string CountModel::to_string() const {
    std::string s(model_kind_name(kind));
    if (kind == ModelKind::HomWeighted) s += "((" + lam.to_string() + ")," + std::to_string(n) + ")";
    else s += "(" + std::to_string(n) + ")";
    return s + " " + std::string(stratum_name(stratum));
}

// ------------------------------------------------------------ group orders

mpz_class group_order(GroupKind g, std::uint64_t q) {
    const mpz_class Q(static_cast<unsigned long>(q));
    switch (g) {
        case GroupKind::GL2: return (Q * Q - 1) * (Q * Q - Q);
        case GroupKind::PGL2: return Q * Q * Q - Q;
        case GroupKind::Gm: return Q - 1;
    }
    return 1;
}

mpq_class weighted_count(const mpz_class& raw, std::uint64_t q, GroupKind g) {
    if (raw < 0) throw Error(ErrorCode::InvalidArgument, "negative count");
    mpq_class r(raw, group_order(g, q));
    r.canonicalize();
    return r;
}

namespace {

mpz_class ipow(std::uint64_t q, unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), e);
    return r;
}

// --------------------------------------------------------- stratum tests

bool tuple_in_stratum(const CountModel& m, const std::vector<BinForm>& u) {
    if (m.stratum == Stratum::AllNonzero) return true;
    if (m.kind == ModelKind::SelfMap) return !bf_resultant(u[0], u[1]).is_zero();
    switch (m.stratum) {
        case Stratum::BasepointFree: return base_point_free(HomTuple(m.lam, m.n, u));
        case Stratum::GitStable: return hm_classify(HomTuple(m.lam, m.n, u)) == GitClass::Stable;
        case Stratum::GitSemistable: return hm_classify(HomTuple(m.lam, m.n, u)) != GitClass::Unstable;
        default: break;
    }
    const StratumLabel l = stratum_classify(WeierstrassDatum(m.n, u[0], u[1]));
    switch (m.stratum) {
        case Stratum::UDelta: return l != StratumLabel::DiscriminantZero;
        case Stratum::UMin: return l == StratumLabel::MinNotSf || l == StratumLabel::Sf;
        case Stratum::USf: return l == StratumLabel::Sf;
        default: break;
    }
    return false;
}

// Decodes tuple index `idx` (base-q digits, coordinate 0 least significant).
void decode_tuple(std::uint64_t idx, std::uint64_t q, const std::vector<unsigned>& degs, const Field& f,
                  std::vector<BinForm>& out) {
    out.clear();
    for (unsigned d : degs) {
        std::vector<Rep> c(d + 1);
        for (auto& v : c) {
            v = static_cast<Rep>(idx % q);
            idx /= q;
        }
        out.emplace_back(f, d, std::move(c));
    }
}

std::uint64_t encode_tuple(const std::vector<BinForm>& u, std::uint64_t q) {
    std::uint64_t idx = 0, scale = 1;
    for (const auto& f : u)
        for (Rep c : f.coeffs()) {
            idx += scale * c;
            scale *= q;
        }
    return idx;
}

std::uint64_t checked_space(const CountModel& m, std::uint64_t q, const mpz_class& budget) {
    const mpz_class space = ipow(q, m.coefficient_count());
    if (space > budget)
        throw Error(ErrorCode::BoundExceeded, "coefficient space " + space.get_str() + " exceeds the brute-force budget " +
                                                  budget.get_str());
    return space.get_ui();
}

mpz_class generic_brute(const CountModel& m, const Field& f, const CountOptions& opt) {
    const std::uint64_t q = f.order();
    const std::uint64_t space = checked_space(m, q, opt.brute_budget);
    const std::vector<unsigned> degs = m.degrees();
    const std::uint64_t chunks = std::min<std::uint64_t>(space, 256);
    std::vector<std::uint64_t> partial(chunks, 0);
    parallel_chunks(space, chunks, resolve_workers(opt.workers), [&](std::uint64_t c, std::uint64_t b, std::uint64_t e) {
        std::vector<BinForm> u;
        std::uint64_t cnt = 0;
        for (std::uint64_t idx = std::max<std::uint64_t>(b, 1); idx < e; ++idx) {
            decode_tuple(idx, q, degs, f, u);
            if (tuple_in_stratum(m, u)) ++cnt;
        }
        partial[c] = cnt;
    });
    mpz_class total = 0;
    for (auto v : partial) total += static_cast<unsigned long>(v);
    return total;
}

// ----------------------------------------------- two-coordinate fast kernel

// Row counts for a fixed first coordinate over F_p. Tallies either the
// four Weierstrass labels or the coprime companions.
class TwoCoordKernel {
   public:
    TwoCoordKernel(const Field& f, unsigned n, unsigned d0, unsigned d1, bool weierstrass)
        : f_(f), p_(static_cast<std::uint32_t>(f.characteristic())), n_(n), d0_(d0), d1_(d1), weier_(weierstrass) {
        inv_.assign(p_, 0);
        for (std::uint32_t x = 1; x < p_; ++x) inv_[x] = f.inv(x);
    }

    // counts: labels indexed by StratumLabel, or counts[0] = coprime count.
    void row(const std::vector<Rep>& a0, std::array<std::uint64_t, 4>& counts) const {
        const BinForm A(f_, d0_, a0);
        if (A.is_zero()) {
            zero_row(counts);
            return;
        }
        const int da = static_cast<int>(A.x_degree());
        const bool y0 = A.y_multiplicity() > 0;
        // x^j mod a for j = 0..d1, each of length da.
        std::vector<std::uint32_t> xmod((d1_ + 1) * std::max(da, 1), 0);
        if (da > 0) {
            std::vector<std::uint32_t> cur(da, 0);
            cur[0] = 1 % p_;
            const std::uint32_t lead_inv = inv_[a0[da]];
            for (unsigned j = 0; j <= d1_; ++j) {
                std::copy(cur.begin(), cur.end(), xmod.begin() + j * da);
                // cur *= x mod a
                std::uint32_t top = cur[da - 1];
                for (int i = da - 1; i > 0; --i) cur[i] = cur[i - 1];
                cur[0] = 0;
                if (top) {
                    const std::uint32_t c = (top * lead_inv) % p_;
                    for (int i = 0; i < da; ++i) cur[i] = (cur[i] + p_ - (c * a0[i]) % p_) % p_;
                }
            }
        }

        std::uint64_t dz1 = UINT64_MAX, dz2 = UINT64_MAX;
        std::optional<BinForm> rad4;
        if (weier_) {
            const BinForm target = A.pow(3).scaled(f_.div(f_.neg(f_.from_int(4)), f_.from_int(27)));
            if (auto R = bf_perfect_root(target, 2)) {
                dz1 = encode_form(*R);
                dz2 = encode_form(R->scaled(f_.neg(1)));
            }
            BinForm r4 = bf_radical_ge(A, 4);
            if (r4.degree() > 0) rad4 = r4;
        }

        std::vector<std::uint32_t> digits(d1_ + 1, 0), r(std::max(da, 1), 0);
        std::vector<std::uint32_t> ga(da + 1), gb(da + 1);
        const std::uint64_t total = ipow(p_, d1_ + 1).get_ui();
        for (std::uint64_t k = 0; k < total; ++k) {
            if (weier_ && (k == dz1 || k == dz2)) {
                ++counts[static_cast<int>(StratumLabel::DiscriminantZero)];
            } else {
                bool coprime = !(y0 && digits[d1_] == 0);
                if (coprime && da > 0) coprime = coprime_small(a0, da, r, ga, gb);
                if (!weier_) {
                    counts[0] += coprime;
                } else if (coprime) {
                    ++counts[static_cast<int>(StratumLabel::Sf)];
                } else if (!rad4) {
                    ++counts[static_cast<int>(StratumLabel::MinNotSf)];
                } else {
                    ++counts[static_cast<int>(slow_label(*rad4, digits))];
                }
            }
            // Odometer step; a wrapped digit changes by 1 - p = 1 mod p.
            for (unsigned j = 0; j <= d1_; ++j) {
                if (da > 0) {
                    const std::uint32_t* xm = &xmod[j * da];
                    for (int i = 0; i < da; ++i) {
                        std::uint32_t s = r[i] + xm[i];
                        r[i] = s >= p_ ? s - p_ : s;
                    }
                }
                if (++digits[j] < p_) break;
                digits[j] = 0;
            }
        }
    }

   private:
    std::uint64_t encode_form(const BinForm& b) const {
        std::uint64_t code = 0;
        for (std::size_t i = b.coeffs().size(); i-- > 0;) code = code * p_ + b.coeffs()[i];
        return code;
    }

    // gcd(a, r) constant, where deg a = da >= 1 and deg r < da.
    bool coprime_small(const std::vector<Rep>& a0, int da, const std::vector<std::uint32_t>& r,
                       std::vector<std::uint32_t>& u, std::vector<std::uint32_t>& v) const {
        int du = da, dv = da - 1;
        for (int i = 0; i <= da; ++i) u[i] = a0[i];
        for (int i = 0; i < da; ++i) v[i] = r[i];
        while (dv >= 0 && v[dv] == 0) --dv;
        while (dv >= 0) {
            if (dv == 0) return true;
            // u = u mod v
            const std::uint32_t li = inv_[v[dv]];
            while (du >= dv) {
                const std::uint32_t c = (u[du] * li) % p_;
                const int s = du - dv;
                for (int i = 0; i <= dv; ++i) u[s + i] = (u[s + i] + p_ - (c * v[i]) % p_) % p_;
                --du;
                while (du >= 0 && u[du] == 0) --du;
            }
            std::swap(u, v);
            std::swap(du, dv);
        }
        return du == 0;
    }

    StratumLabel slow_label(const BinForm& rad4, const std::vector<std::uint32_t>& digits) const {
        std::vector<Rep> c(digits.begin(), digits.end());
        const BinForm B(f_, d1_, std::move(c));
        if (B.is_zero()) return StratumLabel::DeltaOnly;
        return bf_gcd(rad4, bf_radical_ge(B, 6)).degree() > 0 ? StratumLabel::DeltaOnly : StratumLabel::MinNotSf;
    }

    void zero_row(std::array<std::uint64_t, 4>& counts) const {
        // u0 = 0: the companion has positive degree, so never coprime.
        if (!weier_) return;
        const BinForm A(f_, d0_);
        const std::uint64_t total = ipow(p_, d1_ + 1).get_ui();
        std::vector<Rep> c(d1_ + 1);
        for (std::uint64_t k = 1; k < total; ++k) {
            std::uint64_t x = k;
            for (auto& v : c) {
                v = static_cast<Rep>(x % p_);
                x /= p_;
            }
            ++counts[static_cast<int>(stratum_classify(WeierstrassDatum(n_, A, BinForm(f_, d1_, c))))];
        }
    }

    Field f_;
    std::uint32_t p_;
    unsigned n_, d0_, d1_;
    bool weier_;
    std::vector<std::uint32_t> inv_;
};

bool fast_kernel_applies(const CountModel& m, const Field& f, const CountOptions& opt) {
    if (!opt.fast_kernel || f.degree() != 1 || m.lam.size() != 2) return false;
    if (f.characteristic() > 60000) return false;
    switch (m.stratum) {
        case Stratum::BasepointFree:
        case Stratum::Morphism:
        case Stratum::UDelta:
        case Stratum::UMin:
        case Stratum::USf: return true;
        default: return false;
    }
}

std::array<std::uint64_t, 4> fast_brute(const CountModel& m, const Field& f, bool weier, const CountOptions& opt) {
    const std::uint64_t q = f.order();
    checked_space(m, q, opt.brute_budget);
    const auto degs = m.degrees();
    const TwoCoordKernel kernel(f, m.n, degs[0], degs[1], weier);
    const std::uint64_t rows = ipow(q, degs[0] + 1).get_ui();
    const std::uint64_t chunks = std::min<std::uint64_t>(rows, 512);
    std::vector<std::array<std::uint64_t, 4>> partial(chunks, {0, 0, 0, 0});
    parallel_chunks(rows, chunks, resolve_workers(opt.workers), [&](std::uint64_t c, std::uint64_t b, std::uint64_t e) {
        std::vector<Rep> a0(degs[0] + 1);
        for (std::uint64_t idx = b; idx < e; ++idx) {
            std::uint64_t x = idx;
            for (auto& v : a0) {
                v = static_cast<Rep>(x % q);
                x /= q;
            }
            kernel.row(a0, partial[c]);
        }
    });
    std::array<std::uint64_t, 4> total{0, 0, 0, 0};
    for (const auto& p : partial)
        for (int i = 0; i < 4; ++i) total[i] += p[i];
    return total;
}

// ------------------------------------------------------------------ sieve

// Forms of degree d divisible by a fixed form of degree D.
mpz_class multiples(std::uint64_t q, unsigned d, unsigned D) { return D <= d ? ipow(q, d - D + 1) : mpz_class(1); }

// Companions of degree d divisible by none of the given forms (degrees
// listed), by inclusion-exclusion. Assumes the forms pairwise coprime.
mpz_class avoid_count(std::uint64_t q, unsigned d, const std::vector<unsigned>& degs) {
    mpz_class total = 0;
    const std::size_t k = degs.size();
    if (k > 24) throw Error(ErrorCode::BoundExceeded, "too many distinct factors for inclusion-exclusion");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        unsigned D = 0;
        int sign = 1;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) {
                D += degs[i];
                sign = -sign;
            }
        if (sign > 0) total += multiples(q, d, D);
        else total -= multiples(q, d, D);
    }
    return total;
}

// Nonzero forms of degree d with no irreducible factor of multiplicity >= 6:
// (q - 1) [t^d] (1 - t^6)(1 - q t^6) / ((1 - t)(1 - q t)).
mpz_class sixth_power_free(std::uint64_t q, unsigned d) {
    auto a = [&](int m) -> mpz_class {
        if (m < 0) return 0;
        return (ipow(q, static_cast<unsigned>(m) + 1) - 1) / mpz_class(static_cast<unsigned long>(q - 1));
    };
    const mpz_class Q(static_cast<unsigned long>(q));
    const int D = static_cast<int>(d);
    return (Q - 1) * (a(D) - (1 + Q) * a(D - 6) + Q * a(D - 12));
}

struct ClassData {
    std::vector<unsigned> factor_degrees;
    std::vector<unsigned> high_degrees;  // 6 * deg g for factors of multiplicity >= 4
    bool all_even = true;
};

ClassData class_data(const BinForm& u0) {
    ClassData cd;
    for (const auto& fp : bf_factor(u0).factors) {
        cd.factor_degrees.push_back(fp.factor.degree());
        if (fp.multiplicity >= 4) cd.high_degrees.push_back(6 * fp.factor.degree());
        if (fp.multiplicity % 2) cd.all_even = false;
    }
    return cd;
}

mpz_class sieve_count(const CountModel& m, const Field& f) {
    if (m.lam.size() != 2)
        throw Error(ErrorCode::Unsupported, "SIEVE handles two-coordinate models only; use BRUTE");
    const std::uint64_t q = f.order();
    const auto degs = m.degrees();
    const unsigned d0 = degs[0], d1 = degs[1];
    const mpz_class Q(static_cast<unsigned long>(q));
    switch (m.stratum) {
        case Stratum::AllNonzero: return ipow(q, m.coefficient_count()) - 1;
        case Stratum::GitStable:
        case Stratum::GitSemistable:
            throw Error(ErrorCode::Unsupported, "SIEVE does not handle GIT strata; use BRUTE");
        default: break;
    }
    if (m.stratum == Stratum::UDelta || m.stratum == Stratum::UMin) {
        if (q % 2 == 0) throw Error(ErrorCode::UnsupportedCharacteristic, "even characteristic");
    }
    // Row u0 = 0.
    mpz_class total = 0;
    if (m.stratum == Stratum::UDelta) total += ipow(q, d1 + 1) - 1;
    if (m.stratum == Stratum::UMin) total += sixth_power_free(q, d1);
    // Rows u0 != 0, grouped by the monic representative (x-degree e).
    const mpz_class full = ipow(q, d1 + 1);
    for (unsigned e = 0; e <= d0; ++e) {
        const std::uint64_t count = ipow(q, e).get_ui();
        std::vector<Rep> c(d0 + 1, 0);
        for (std::uint64_t code = 0; code < count; ++code) {
            std::uint64_t x = code;
            for (unsigned i = 0; i < e; ++i) {
                c[i] = static_cast<Rep>(x % q);
                x /= q;
            }
            c[e] = 1;
            const ClassData cd = class_data(BinForm(f, d0, c));
            switch (m.stratum) {
                case Stratum::BasepointFree:
                case Stratum::Morphism:
                case Stratum::USf: total += (Q - 1) * avoid_count(q, d1, cd.factor_degrees); break;
                case Stratum::UDelta:
                    // -4 A^3 / 27 = B^2 has two solutions for (q - 1) / 2 scalars when
                    // every multiplicity of A is even, none otherwise.
                    total += (Q - 1) * full - (cd.all_even ? Q - 1 : mpz_class(0));
                    break;
                case Stratum::UMin:
                    total += (Q - 1) * avoid_count(q, d1, cd.high_degrees) -
                             (cd.all_even && cd.high_degrees.empty() ? Q - 1 : mpz_class(0));
                    break;
                default: break;
            }
        }
    }
    return total;
}

}  // namespace

// -------------------------------------------------------------- public API

std::array<mpz_class, 4> weierstrass_label_counts(unsigned n, const Field& f, const CountOptions& opt) {
    const CountModel m = CountModel::hom(WeightVector({4, 6}), n, Stratum::UDelta);
    m.validate_field(f);
    std::array<mpz_class, 4> out;
    if (fast_kernel_applies(m, f, opt)) {
        auto c = fast_brute(m, f, true, opt);
        for (int i = 0; i < 4; ++i) out[i] = static_cast<unsigned long>(c[i]);
        return out;
    }
    const std::uint64_t q = f.order();
    const std::uint64_t space = checked_space(m, q, opt.brute_budget);
    const auto degs = m.degrees();
    const std::uint64_t chunks = std::min<std::uint64_t>(space, 256);
    std::vector<std::array<std::uint64_t, 4>> partial(chunks, {0, 0, 0, 0});
    parallel_chunks(space, chunks, resolve_workers(opt.workers), [&](std::uint64_t c, std::uint64_t b, std::uint64_t e) {
        std::vector<BinForm> u;
        for (std::uint64_t idx = std::max<std::uint64_t>(b, 1); idx < e; ++idx) {
            decode_tuple(idx, q, degs, f, u);
            ++partial[c][static_cast<int>(stratum_classify(WeierstrassDatum(n, u[0], u[1])))];
        }
    });
    for (int i = 0; i < 4; ++i) {
        out[i] = 0;
        for (const auto& p : partial) out[i] += static_cast<unsigned long>(p[i]);
    }
    return out;
}

mpz_class cone_count(const CountModel& model, const Field& f, Method method, const CountOptions& opt) {
    model.validate();
    model.validate_field(f);
    if (method == Method::Sieve) return sieve_count(model, f);
    if (model.stratum == Stratum::AllNonzero) {
        checked_space(model, f.order(), opt.brute_budget);
        return generic_brute(model, f, opt);
    }
    if (model.is_weierstrass_shape() &&
        (model.stratum == Stratum::UDelta || model.stratum == Stratum::UMin || model.stratum == Stratum::USf)) {
        const auto labels = weierstrass_label_counts(model.n, f, opt);
        const auto L = [&](StratumLabel l) { return labels[static_cast<int>(l)]; };
        switch (model.stratum) {
            case Stratum::UDelta: return L(StratumLabel::DeltaOnly) + L(StratumLabel::MinNotSf) + L(StratumLabel::Sf);
            case Stratum::UMin: return L(StratumLabel::MinNotSf) + L(StratumLabel::Sf);
            default: return L(StratumLabel::Sf);
        }
    }
    if (fast_kernel_applies(model, f, opt)) {
        return static_cast<unsigned long>(fast_brute(model, f, false, opt)[0]);
    }
    return generic_brute(model, f, opt);
}

mpz_class companion_count(const CountModel& model, const BinForm& u0, Method method) {
    model.validate();
    if (model.lam.size() != 2) throw Error(ErrorCode::Unsupported, "companion counts need two coordinates");
    const Field& f = u0.field();
    model.validate_field(f);
    const auto degs = model.degrees();
    if (u0.degree() != degs[0]) throw Error(ErrorCode::DegreeMismatch, "first coordinate has the wrong degree");
    const std::uint64_t q = f.order();
    const unsigned d1 = degs[1];
    if (method == Method::Brute) {
        const mpz_class rows = ipow(q, d1 + 1);
        if (rows > mpz_class("4000000000")) throw Error(ErrorCode::BoundExceeded, "companion space too large");
        const std::uint64_t total = rows.get_ui();
        std::uint64_t cnt = 0;
        std::vector<Rep> c(d1 + 1);
        for (std::uint64_t k = 0; k < total; ++k) {
            std::uint64_t x = k;
            for (auto& v : c) {
                v = static_cast<Rep>(x % q);
                x /= q;
            }
            BinForm u1(f, d1, c);
            if (u0.is_zero() && u1.is_zero()) continue;
            cnt += tuple_in_stratum(model, {u0, u1});
        }
        return static_cast<unsigned long>(cnt);
    }
    // Sieve formulas for a single row.
    const mpz_class full = ipow(q, d1 + 1);
    if (model.stratum == Stratum::AllNonzero) return u0.is_zero() ? full - 1 : full;
    if (u0.is_zero()) {
        switch (model.stratum) {
            case Stratum::UDelta: return full - 1;
            case Stratum::UMin: return sixth_power_free(q, d1);
            case Stratum::GitStable:
            case Stratum::GitSemistable: throw Error(ErrorCode::Unsupported, "SIEVE does not handle GIT strata");
            default: return 0;
        }
    }
    const ClassData cd = class_data(u0);
    int dz = 0;
    std::optional<BinForm> root;
    if (model.stratum == Stratum::UDelta || model.stratum == Stratum::UMin) {
        const BinForm target = u0.pow(3).scaled(f.div(f.neg(f.from_int(4)), f.from_int(27)));
        root = bf_perfect_root(target, 2);
        if (root) dz = 2;
    }
    switch (model.stratum) {
        case Stratum::BasepointFree:
        case Stratum::Morphism:
        case Stratum::USf: return avoid_count(q, d1, cd.factor_degrees);
        case Stratum::UDelta: return full - dz;
        case Stratum::UMin: {
            mpz_class good = avoid_count(q, d1, cd.high_degrees);
            if (root) {
                // Remove the discriminant-zero companions the avoidance count kept.
                const BinForm r4 = bf_radical_ge(u0, 4);
                const bool kept = r4.degree() == 0 || bf_gcd(r4, bf_radical_ge(*root, 6)).degree() == 0;
                if (kept) good -= 2;
            }
            return good;
        }
        default: throw Error(ErrorCode::Unsupported, "SIEVE does not handle GIT strata");
    }
}

// ---------------------------------------------------------------- reports

bool CountReport::ok() const noexcept {
    if (match && !*match) return false;
    if (bounds && !bounds->satisfied) return false;
    return true;
}

bool operator==(const CountReport& a, const CountReport& b) {
    auto same_bounds = [](const std::optional<BoundCheck>& x, const std::optional<BoundCheck>& y) {
        if (x.has_value() != y.has_value()) return false;
        return !x || (x->lower == y->lower && x->upper == y->upper && x->satisfied == y->satisfied);
    };
    return a.model == b.model && a.q == b.q && a.field == b.field && a.method == b.method &&
           a.raw_cone_count == b.raw_cone_count && a.group == b.group && a.group_order == b.group_order &&
           a.weighted_count == b.weighted_count && a.predicted == b.predicted && a.match == b.match &&
           same_bounds(a.bounds, b.bounds) && a.empirical == b.empirical && a.formula_value == b.formula_value;
}

CountReport verify_report(const CountModel& model, const Field& f, Method method, const CountOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    CountReport r{model, f.order(), f.name(), method, 0, GroupKind::GL2, 0, 0, {}, {}, {}, false, {}, {}};
    r.raw_cone_count = cone_count(model, f, method, opt);
    r.group_order = group_order(GroupKind::GL2, r.q);
    r.weighted_count = weighted_count(r.raw_cone_count, r.q, GroupKind::GL2);
    const long q = static_cast<long>(r.q);

    auto exact = [&](const mpq_class& value, bool proven) {
        if (proven) {
            r.predicted = value;
            r.match = r.weighted_count == value;
        } else {
            r.empirical = true;
            r.formula_value = value;
        }
    };
    auto bounded = [&](bool proven) {
        if (!proven) {
            r.empirical = true;
            return;
        }
        const mpq_class lo = specialize(motive_moduli(model.lam, model.n).value, q);
        const mpq_class hi = specialize(motive_ambient(model.lam, model.n), q);
        r.bounds = BoundCheck{lo, hi, lo <= r.weighted_count && r.weighted_count <= hi};
    };

    if (model.kind == ModelKind::SelfMap) {
        if (model.stratum == Stratum::Morphism)
            exact(specialize(motive_selfmap_moduli(model.n).value, q), model.n % 2 == 0);
    } else {
        const bool odd = model.n % 2 == 1;
        switch (model.stratum) {
            case Stratum::BasepointFree:
            case Stratum::USf: exact(specialize(motive_moduli(model.lam, model.n).value, q), odd); break;
            case Stratum::AllNonzero: exact(specialize(motive_ambient(model.lam, model.n), q), odd); break;
            case Stratum::UDelta:
            case Stratum::UMin:
            case Stratum::GitStable:
            case Stratum::GitSemistable: bounded(odd); break;
            default: break;
        }
    }
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// ---------------------------------------------------------------- burnside

BurnsideResult burnside_check(const CountModel& model, const Field& f, const BurnsideOptions& opt) {
    model.validate();
    model.validate_field(f);
    const std::uint64_t q = f.order();
    const std::uint64_t space = checked_space(model, q, mpz_class(static_cast<unsigned long>(opt.max_cone) + 1));
    const auto degs = model.degrees();

    struct Mat {
        Rep a, b, c, d, ia, ib, ic, id;
    };
    std::vector<Mat> group;
    for (Rep a = 0; a < q; ++a)
        for (Rep b = 0; b < q; ++b)
            for (Rep c = 0; c < q; ++c)
                for (Rep d = 0; d < q; ++d) {
                    const Rep det = f.sub(f.mul(a, d), f.mul(b, c));
                    if (det == 0) continue;
                    const Rep di = f.inv(det);
                    group.push_back({a, b, c, d, f.mul(d, di), f.mul(f.neg(b), di), f.mul(f.neg(c), di), f.mul(a, di)});
                }
    const mpz_class order = group_order(GroupKind::GL2, q);

    auto act = [&](const std::vector<BinForm>& u, const Mat& g) {
        std::vector<BinForm> v;
        if (model.kind == ModelKind::HomWeighted) {
            for (const auto& x : u) v.push_back(bf_substitute(x, g.a, g.b, g.c, g.d));
        } else {
            const BinForm F1 = bf_substitute(u[0], g.ia, g.ib, g.ic, g.id);
            const BinForm G1 = bf_substitute(u[1], g.ia, g.ib, g.ic, g.id);
            v.push_back(F1.scaled(g.a) + G1.scaled(g.b));
            v.push_back(F1.scaled(g.c) + G1.scaled(g.d));
        }
        return v;
    };

    std::vector<bool> seen(space, false);
    BurnsideResult res{0, 0, 0, true};
    mpz_class raw = 0;
    std::vector<BinForm> u;
    for (std::uint64_t idx = 1; idx < space; ++idx) {
        if (seen[idx]) continue;
        decode_tuple(idx, q, degs, f, u);
        if (!tuple_in_stratum(model, u)) continue;
        std::uint64_t stab = 0, orbit = 0;
        for (const auto& g : group) {
            const std::uint64_t j = encode_tuple(act(u, g), q);
            if (j == idx) ++stab;
            if (!seen[j]) {
                seen[j] = true;
                ++orbit;
            }
        }
        raw += static_cast<unsigned long>(orbit);
        res.orbits += 1;
        if (mpz_class(static_cast<unsigned long>(orbit * stab)) != order) res.consistent = false;
        const long s = static_cast<long>(stab) + opt.stabilizer_offset;
        if (s <= 0) {
            res.consistent = false;
            continue;
        }
        res.orbit_sum += mpq_class(1, s);
    }
    res.orbit_sum.canonicalize();
    res.cone_ratio = weighted_count(raw, q, GroupKind::GL2);
    const mpq_class expected = weighted_count(cone_count(model, f, Method::Brute), q, GroupKind::GL2);
    res.consistent = res.consistent && res.orbit_sum == res.cone_ratio && res.cone_ratio == expected;
    return res;
}

}  // namespace wstack
