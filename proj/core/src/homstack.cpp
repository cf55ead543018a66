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

#include "wstack/homstack.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "wstack/parallel.hpp"

namespace wstack {

WeightVector::WeightVector(std::vector<unsigned> weights) : w_(std::move(weights)) {
    if (w_.size() < 2) throw Error(ErrorCode::InvalidArgument, "a weight vector needs at least two weights");
    for (unsigned v : w_)
        if (v == 0) throw Error(ErrorCode::InvalidArgument, "weights must be positive");
}

unsigned WeightVector::total() const noexcept { return std::accumulate(w_.begin(), w_.end(), 0u); }

unsigned WeightVector::coefficient_count(unsigned n) const noexcept {
    unsigned c = 0;
    for (unsigned v : w_) c += n * v + 1;
    return c;
}

std::uint64_t WeightVector::max_pair_lcm() const noexcept {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
        for (std::size_t j = i + 1; j < w_.size(); ++j) m = std::max<std::uint64_t>(m, std::lcm(w_[i], w_[j]));
    return m;
}

std::string WeightVector::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w_[i]);
    }
    return s;
}

WeightVector parse_weights(std::string_view text) {
    std::vector<unsigned> w;
    std::string_view sv(text);
    while (true) {
        const auto comma = sv.find(',');
        std::string_view tok = sv.substr(0, comma);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw Error(ErrorCode::Parse, "cannot parse weights '" + std::string(text) + "'");
        w.push_back(v);
        if (comma == std::string_view::npos) break;
        sv.remove_prefix(comma + 1);
    }
    return WeightVector(std::move(w));
}

HomTuple::HomTuple(WeightVector lam, unsigned n, std::vector<BinForm> forms)
    : lam_(std::move(lam)), n_(n), u_(std::move(forms)) {
    if (n_ == 0) throw Error(ErrorCode::InvalidArgument, "degree n must be positive");
    if (u_.size() != lam_.size())
        throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(lam_.size()) + " forms, got " +
                                                    std::to_string(u_.size()));
    bool nonzero = false;
    for (std::size_t i = 0; i < u_.size(); ++i) {
        if (u_[i].field() != u_[0].field()) throw Error(ErrorCode::FieldMismatch, "forms over different fields");
        if (u_[i].degree() != n_ * lam_[i])
            throw Error(ErrorCode::DegreeMismatch, "coordinate " + std::to_string(i) + " has degree " +
                                                       std::to_string(u_[i].degree()) + ", expected n*lambda = " +
                                                       std::to_string(n_ * lam_[i]));
        nonzero |= !u_[i].is_zero();
    }
    if (!nonzero) throw Error(ErrorCode::ZeroForm, "all coordinates are zero");
}

std::string HomTuple::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < u_.size(); ++i) {
        if (i) s += " : ";
        s += u_[i].to_string();
    }
    return s + "]";
}

HomTuple parse_tuple(const Field& f, const WeightVector& lam, unsigned n, std::string_view text) {
    std::vector<BinForm> forms;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t semi = text.find(';', pos);
        if (semi == std::string_view::npos) semi = text.size();
        forms.push_back(parse_form(f, std::string(text.substr(pos, semi - pos))));
        pos = semi + 1;
    }
    return HomTuple(lam, n, std::move(forms));
}

HomTuple hom_substitute(const HomTuple& t, const Moebius& g) {
    std::vector<BinForm> v;
    v.reserve(t.forms().size());
    for (const auto& u : t.forms()) v.push_back(bf_substitute(u, g));
    return HomTuple(t.lam(), t.n(), std::move(v));
}

namespace {

// gcd over the nonzero entries; nullopt when every entry is zero.
std::optional<BinForm> gcd_nonzero(const std::vector<BinForm>& forms) {
    std::optional<BinForm> g;
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        g = g ? bf_gcd(*g, f) : f.monic();
        if (g->degree() == 0) break;
    }
    return g;
}

// Some point satisfies ord_p(u_i) >= threshold(i) for every i.
bool common_threshold_point(const HomTuple& t, bool strict) {
    std::vector<BinForm> loci;
    for (std::size_t i = 0; i < t.forms().size(); ++i) {
        const BinForm& u = t[i];
        if (u.is_zero()) continue;
        const unsigned half2 = t.n() * t.lam()[i];
        const unsigned threshold = strict ? half2 / 2 + 1 : (half2 + 1) / 2;
        loci.push_back(bf_radical_ge(u, threshold));
    }
    auto g = gcd_nonzero(loci);
    return g && g->degree() > 0;
}

}  // namespace

bool base_point_free(const HomTuple& t) {
    auto g = gcd_nonzero(t.forms());
    return g && g->degree() == 0;
}

std::optional<ConstancyWitness> constancy_witness(const HomTuple& t) {
    const Field& F = t.field();
    unsigned ell = 0;
    for (std::size_t i = 0; i < t.forms().size(); ++i)
        if (!t[i].is_zero()) ell = std::gcd(ell, t.lam()[i]);
    std::size_t i0 = t.forms().size();
    for (std::size_t i = 0; i < t.forms().size(); ++i)
        if (!t[i].is_zero() && (i0 == t.forms().size() || t.lam()[i] < t.lam()[i0])) i0 = i;
    const unsigned e0 = t.lam()[i0] / ell;

    Factorization s = bf_squarefree(t[i0]);
    BinForm U = BinForm::constant(F, 1);
    for (const auto& fp : s.factors) {
        if (fp.multiplicity % e0 != 0) return std::nullopt;
        U = U * fp.factor.pow(fp.multiplicity / e0);
    }
    ConstancyWitness w{ell, U, std::vector<Rep>(t.forms().size(), 0), bf_distinct_roots(U)};
    for (std::size_t i = 0; i < t.forms().size(); ++i) {
        if (t[i].is_zero()) continue;
        BinForm power = U.pow(t.lam()[i] / ell);
        const Rep c = t[i].leading();
        if (power.scaled(c) != t[i]) return std::nullopt;
        w.a[i] = c;
    }
    return w;
}

std::string_view git_class_name(GitClass c) noexcept {
    switch (c) {
        case GitClass::Unstable: return "UNSTABLE";
        case GitClass::StrictlySemistable: return "STRICTLY_SEMISTABLE";
        case GitClass::Stable: return "STABLE";
    }
    return "?";
}

GitClass hm_classify(const HomTuple& t) {
    if (common_threshold_point(t, true)) return GitClass::Unstable;
    if (common_threshold_point(t, false)) return GitClass::StrictlySemistable;
    return GitClass::Stable;
}

std::string_view stabilizer_verdict_name(StabilizerVerdict v) noexcept {
    switch (v) {
        case StabilizerVerdict::FiniteReducedTame: return "FINITE_REDUCED_TAME";
        case StabilizerVerdict::NotFiniteReducedTame: return "NOT_FINITE_REDUCED_TAME";
        case StabilizerVerdict::OutOfRegime: return "OUT_OF_REGIME";
    }
    return "?";
}

bool stabilizer_regime(const WeightVector& lam, unsigned n, std::uint64_t char_p) noexcept {
    return char_p == 0 || char_p > lam.max_pair_lcm() * n;
}

StabilizerVerdict stabilizer_verdict(const HomTuple& t, std::uint64_t char_p) {
    if (!stabilizer_regime(t.lam(), t.n(), char_p)) return StabilizerVerdict::OutOfRegime;
    auto w = constancy_witness(t);
    if (w && w->degenerate_support <= 2) return StabilizerVerdict::NotFiniteReducedTame;
    return StabilizerVerdict::FiniteReducedTame;
}

StabilizerVerdict stabilizer_verdict(const HomTuple& t) { return stabilizer_verdict(t, t.field().characteristic()); }

std::vector<Moebius> pgl2_stabilizer(const HomTuple& t, unsigned workers) {
    const Field& F = t.field();
    const std::vector<Moebius> group = pgl2_enumerate(F);
    const std::size_t m = t.forms().size();

    auto fixes = [&](const Moebius& g) {
        std::vector<Rep> ratio(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            const BinForm& u = t[i];
            if (u.is_zero()) continue;
            BinForm v = bf_substitute(u, g);
            const Rep c = F.div(v.coeff(u.x_degree()), u.leading());
            if (c == 0 || v != u.scaled(c)) return false;
            ratio[i] = c;
        }
        for (std::uint64_t mu = 1; mu < F.order(); ++mu) {
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i)
                if (!t[i].is_zero()) ok = F.pow(static_cast<Rep>(mu), t.lam()[i]) == ratio[i];
            if (ok) return true;
        }
        return false;
    };

    const std::uint64_t chunks = 64;
    std::vector<std::vector<Moebius>> parts(chunks);
    parallel_chunks(group.size(), chunks, resolve_workers(workers),
                    [&](std::uint64_t c, std::uint64_t b, std::uint64_t e) {
                        for (std::uint64_t j = b; j < e; ++j)
                            if (fixes(group[j])) parts[c].push_back(group[j]);
                    });
    std::vector<Moebius> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::string_view fatpoint_verdict_name(FatPointVerdict v) noexcept {
    return v == FatPointVerdict::FiniteReduced ? "FINITE_REDUCED" : "NOT_FINITE_REDUCED";
}

unsigned tame_point_count(const Factorization& fact, std::uint64_t char_p) noexcept {
    unsigned count = 0;
    for (const auto& fp : fact.factors)
        if (char_p == 0 || fp.multiplicity % char_p != 0) count += fp.factor.degree();
    return count;
}

FatPointVerdict fatpoint_finite_reduced(const Factorization& fact, std::uint64_t char_p) {
    return tame_point_count(fact, char_p) >= 3 ? FatPointVerdict::FiniteReduced : FatPointVerdict::NotFiniteReduced;
}

}  // namespace wstack
