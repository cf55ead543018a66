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

#include "wstack/selfmaps.hpp"

#include "wstack/homstack.hpp"
#include "wstack/parallel.hpp"

namespace wstack {

RatSelfMap::RatSelfMap(unsigned n, BinForm F, BinForm G) : n_(n), F_(std::move(F)), G_(std::move(G)) {
    if (n_ == 0) throw Error(ErrorCode::InvalidArgument, "self-map degree must be positive");
    if (F_.field() != G_.field()) throw Error(ErrorCode::FieldMismatch, "F and G over different fields");
    if (F_.degree() != n_ || G_.degree() != n_)
        throw Error(ErrorCode::DegreeMismatch, "F and G need degree " + std::to_string(n_));
    if (F_.is_zero() && G_.is_zero()) throw Error(ErrorCode::ZeroForm, "(F, G) = (0, 0)");
    morphism_ = !bf_resultant(F_, G_).is_zero();
}

std::string RatSelfMap::to_string() const { return "[" + F_.to_string() + " : " + G_.to_string() + "]"; }

RatSelfMap parse_selfmap(const Field& f, unsigned n, const std::string& F, const std::string& G) {
    return RatSelfMap(n, parse_form(f, F), parse_form(f, G));
}

BinForm fix_divisor(const RatSelfMap& m) {
    const Field& f = m.field();
    BinForm d = BinForm::monomial(f, 0, 1) * m.F() - BinForm::monomial(f, 1, 0) * m.G();
    if (d.is_zero()) throw Error(ErrorCode::IdentityMap, "the identity map has no fixed-point divisor");
    return d;
}

BinForm crit_divisor(const RatSelfMap& m) {
    BinForm w = bf_partial(m.F(), Var::X) * bf_partial(m.G(), Var::Y) -
                bf_partial(m.F(), Var::Y) * bf_partial(m.G(), Var::X);
    if (w.is_zero())
        throw Error(ErrorCode::WildRamification,
                    "the Wronskian vanishes identically (characteristic " +
                        std::to_string(m.field().characteristic()) + ", degree " + std::to_string(m.n()) + ")");
    return w.monic();
}

RatSelfMap conjugate_action(const RatSelfMap& m, const Moebius& g) {
    const Moebius h = g.inverse();
    BinForm F1 = bf_substitute(m.F(), h);
    BinForm G1 = bf_substitute(m.G(), h);
    return RatSelfMap(m.n(), F1.scaled(g.a()) + G1.scaled(g.b()), F1.scaled(g.c()) + G1.scaled(g.d()));
}

std::string_view selfmap_tameness_name(SelfMapTameness t) noexcept {
    switch (t) {
        case SelfMapTameness::TameFinite: return "TAME_FINITE";
        case SelfMapTameness::NotGuaranteed: return "NOT_GUARANTEED";
        case SelfMapTameness::OutOfRegime: return "OUT_OF_REGIME";
    }
    return "?";
}

SelfMapTameness selfmap_tameness(const RatSelfMap& m) {
    if (!m.is_morphism()) throw Error(ErrorCode::NotMorphism, "F and G share a root");
    const std::uint64_t p = m.field().characteristic();
    if (p <= m.n()) return SelfMapTameness::OutOfRegime;
    BinForm fix = BinForm::constant(m.field(), 1);
    try {
        fix = fix_divisor(m);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::IdentityMap) throw;
        return SelfMapTameness::NotGuaranteed;
    }
    const Factorization fact = bf_factor(fix * crit_divisor(m));
    return fatpoint_finite_reduced(fact, p) == FatPointVerdict::FiniteReduced ? SelfMapTameness::TameFinite
                                                                              : SelfMapTameness::NotGuaranteed;
}

std::vector<Moebius> selfmap_stabilizer(const RatSelfMap& m, unsigned workers) {
    const Field& f = m.field();
    const std::vector<Moebius> group = pgl2_enumerate(f);
    // m' = c m with c != 0 for the pair (F, G).
    auto same_up_to_scalar = [&](const RatSelfMap& other) {
        const BinForm& ref = m.F().is_zero() ? m.G() : m.F();
        const BinForm& cand = m.F().is_zero() ? other.G() : other.F();
        const Rep c = f.div(cand.coeff(ref.x_degree()), ref.leading());
        return c != 0 && other.F() == m.F().scaled(c) && other.G() == m.G().scaled(c);
    };
    const std::uint64_t chunks = 64;
    std::vector<std::vector<Moebius>> parts(chunks);
    parallel_chunks(group.size(), chunks, resolve_workers(workers),
                    [&](std::uint64_t c, std::uint64_t b, std::uint64_t e) {
                        for (std::uint64_t j = b; j < e; ++j)
                            if (same_up_to_scalar(conjugate_action(m, group[j]))) parts[c].push_back(group[j]);
                    });
    std::vector<Moebius> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace wstack
