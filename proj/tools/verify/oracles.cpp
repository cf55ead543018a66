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

#include "oracles.hpp"

namespace wstack::verify {

PointOracle::PointOracle(std::uint64_t p, unsigned max_degree) {
    for (unsigned k = 1; k <= max_degree; ++k) {
        bool maximal = true;
        for (unsigned m = 2 * k; m <= max_degree; m += k) maximal = false;
        if (!maximal) continue;
        Field e = make_field(p, k);
        levels_.push_back({e, projective_line(e)});
    }
}

template <typename Visit>
bool PointOracle::any_common_zero(const std::vector<BinForm>& forms, Visit&& visit) const {
    for (const auto& level : levels_) {
        std::vector<BinForm> lifted;
        for (const auto& u : forms) {
            if (u.is_zero()) continue;
            lifted.emplace_back(level.field, u.degree(), u.coeffs());
        }
        for (const auto& pt : level.points) {
            bool all = true;
            for (const auto& u : lifted)
                if (!bf_eval(u, pt).is_zero()) {
                    all = false;
                    break;
                }
            if (all && visit(level.field, pt)) return true;
        }
    }
    return false;
}

bool PointOracle::has_common_zero(const HomTuple& t) const {
    return any_common_zero(t.forms(), [](const Field&, const ProjPoint&) { return true; });
}

GitClass PointOracle::git_class(const HomTuple& t) const {
    bool strict = false;
    const bool unstable = any_common_zero(t.forms(), [&](const Field& e, const ProjPoint& pt) {
        bool above = true, at_least = true;
        for (std::size_t i = 0; i < t.forms().size(); ++i) {
            if (t[i].is_zero()) continue;
            const std::uint64_t twice = 2ull * bf_ord_at(BinForm(e, t[i].degree(), t[i].coeffs()), pt);
            const std::uint64_t bound = std::uint64_t{t.n()} * t.lam()[i];
            above = above && twice > bound;
            at_least = at_least && twice >= bound;
        }
        strict = strict || at_least;
        return above;
    });
    if (unstable) return GitClass::Unstable;
    return strict ? GitClass::StrictlySemistable : GitClass::Stable;
}

StratumLabel PointOracle::weierstrass_label(const WeierstrassDatum& w) const {
    if (w.discriminant().is_zero()) return StratumLabel::DiscriminantZero;
    bool common = false;
    const bool deep = any_common_zero({w.A(), w.B()}, [&](const Field& e, const ProjPoint& pt) {
        common = true;
        const unsigned a = bf_ord_at(BinForm(e, w.A().degree(), w.A().coeffs()), pt);
        const unsigned b = bf_ord_at(BinForm(e, w.B().degree(), w.B().coeffs()), pt);
        return a >= 4 && b >= 6;
    });
    if (deep) return StratumLabel::DeltaOnly;
    return common ? StratumLabel::MinNotSf : StratumLabel::Sf;
}

namespace {

BinForm sample_form(const Field& f, unsigned d, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
    std::vector<Rep> c(d + 1);
    for (auto& v : c) v = static_cast<Rep>(pick(rng));
    return BinForm(f, d, std::move(c));
}

BinForm sample_linear(const Field& f, std::mt19937_64& rng) {
    for (;;) {
        BinForm l = sample_form(f, 1, rng);
        if (!l.is_zero()) return l;
    }
}

}  // namespace

HomTuple sample_tuple(const Field& f, const WeightVector& lam, unsigned n, std::mt19937_64& rng, bool degenerate) {
    std::uniform_int_distribution<int> coin(0, 5);
    for (;;) {
        const BinForm ell = sample_linear(f, rng);
        std::vector<BinForm> u;
        bool nonzero = false;
        for (unsigned w : lam.weights()) {
            const unsigned d = n * w;
            if (!degenerate) {
                u.push_back(sample_form(f, d, rng));
            } else if (coin(rng) == 0) {
                u.emplace_back(f, d);
            } else {
                std::uniform_int_distribution<unsigned> depth(0, d);
                const unsigned k = depth(rng);
                u.push_back(ell.pow(k) * sample_form(f, d - k, rng));
            }
            nonzero = nonzero || !u.back().is_zero();
        }
        if (nonzero) return HomTuple(lam, n, std::move(u));
    }
}

WeierstrassDatum sample_datum(const Field& f, unsigned n, std::mt19937_64& rng, bool degenerate) {
    const WeightVector lam({4, 6});
    for (;;) {
        HomTuple t = sample_tuple(f, lam, n, rng, degenerate);
        if (discriminant(t[0], t[1]).is_zero()) continue;
        return WeierstrassDatum(n, t[0], t[1]);
    }
}

Moebius sample_moebius(const Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
    for (;;) {
        const Rep a = static_cast<Rep>(pick(rng)), b = static_cast<Rep>(pick(rng));
        const Rep c = static_cast<Rep>(pick(rng)), d = static_cast<Rep>(pick(rng));
        if (f.sub(f.mul(a, d), f.mul(b, c)) != 0) return Moebius::make(f, a, b, c, d);
    }
}

}  // namespace wstack::verify
