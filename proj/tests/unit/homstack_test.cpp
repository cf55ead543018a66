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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_support.hpp"
#include "wstack/homstack.hpp"

namespace wstack {
namespace {

using testing::degenerate_tuple;
using testing::form;
using testing::random_moebius;
using testing::random_tuple;

HomTuple tuple46(const Field& f, unsigned n, std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
    return HomTuple(WeightVector({4, 6}), n, {form(f, std::move(a)), form(f, std::move(b))});
}

// Y-power first: X^i Y^j in a form of degree i + j.
std::vector<std::int64_t> mono(unsigned i, unsigned j) {
    std::vector<std::int64_t> c(i + j + 1, 0);
    c[i] = 1;
    return c;
}

std::vector<std::int64_t> zero(unsigned d) { return std::vector<std::int64_t>(d + 1, 0); }

// Threshold oracle: orders of vanishing at every point of P^1 over the
// given fields (which must contain all roots of the tuple).
GitClass classify_by_enumeration(const HomTuple& t, const std::vector<Field>& exts) {
    bool strict = false;
    for (const Field& e : exts) {
        std::vector<BinForm> lifted;
        for (const auto& u : t.forms()) lifted.emplace_back(e, u.degree(), u.coeffs());
        for (const auto& pt : projective_line(e)) {
            bool all_above = true, all_at_least = true;
            for (std::size_t i = 0; i < lifted.size(); ++i) {
                const unsigned o = bf_ord_at(lifted[i], pt);
                const std::uint64_t twice = o == kInfiniteOrder ? UINT64_MAX : 2ull * o;
                const std::uint64_t bound = std::uint64_t{t.n()} * t.lam()[i];
                all_above = all_above && twice > bound;
                all_at_least = all_at_least && twice >= bound;
            }
            if (all_above) return GitClass::Unstable;
            strict = strict || all_at_least;
        }
    }
    return strict ? GitClass::StrictlySemistable : GitClass::Stable;
}

bool same_weighted_class(const HomTuple& s, const HomTuple& t) {
    const Field& f = s.field();
    for (Rep mu = 1; mu < f.order(); ++mu) {
        bool ok = true;
        for (std::size_t i = 0; i < s.forms().size() && ok; ++i)
            ok = s[i].scaled(f.pow(mu, s.lam()[i])) == t[i];
        if (ok) return true;
    }
    return false;
}

TEST(WeightVectorTest, Basics) {
    WeightVector w = parse_weights("4,6");
    EXPECT_EQ(w.size(), 2u);
    EXPECT_EQ(w.total(), 10u);
    EXPECT_EQ(w.coefficient_count(1), 12u);
    EXPECT_EQ(w.coefficient_count(2), 22u);
    EXPECT_EQ(w.max_pair_lcm(), 12u);
    EXPECT_EQ(w.to_string(), "4,6");
    EXPECT_EQ(parse_weights(" 1, 3 "), WeightVector({1, 3}));
    EXPECT_THROW(parse_weights(""), Error);
    EXPECT_THROW(parse_weights("0,2"), Error);
    EXPECT_THROW(parse_weights("4;6"), Error);
    EXPECT_THROW(WeightVector({}), Error);
}

TEST(HomTupleTest, Validation) {
    Field f5 = make_field(5), f7 = make_field(7);
    WeightVector w({4, 6});
    EXPECT_THROW(HomTuple(w, 1, {BinForm(f5, 4)}), Error);
    EXPECT_THROW(HomTuple(w, 1, {BinForm(f5, 4), form(f5, mono(1, 4))}), Error);
    EXPECT_THROW(HomTuple(w, 1, {BinForm(f5, 4), BinForm(f5, 6)}), Error);
    EXPECT_THROW(HomTuple(w, 1, {form(f5, mono(4, 0)), form(f7, mono(0, 6))}), Error);
    EXPECT_THROW(HomTuple(w, 0, {BinForm(f5, 0, {1}), BinForm(f5, 0, {1})}), Error);
    HomTuple t = parse_tuple(f5, w, 1, "0,0,0,0,1; 1,0,0,0,0,0,0");
    EXPECT_EQ(t, tuple46(f5, 1, mono(4, 0), mono(0, 6)));
    EXPECT_THROW(parse_tuple(f5, w, 1, "0,0,0,0,1"), Error);
}

TEST(HomTupleTest, BasePointFree) {
    Field f = make_field(5);
    EXPECT_TRUE(base_point_free(tuple46(f, 1, mono(4, 0), mono(0, 6))));
    EXPECT_FALSE(base_point_free(tuple46(f, 1, mono(4, 0), mono(6, 0))));
    EXPECT_FALSE(base_point_free(tuple46(f, 1, zero(4), mono(1, 5))));
    // Proportional coordinates share every root.
    HomTuple t(WeightVector({1, 1}), 2, {form(f, {2, 0, 1}), form(f, {2, 0, 1}).scaled(3)});
    EXPECT_FALSE(base_point_free(t));
}

TEST(HomTupleTest, ConstancyWitnessExamples) {
    Field f = make_field(5);
    auto w = constancy_witness(tuple46(f, 2, mono(8, 0), mono(12, 0)));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->ell, 2u);
    EXPECT_EQ(w->U, BinForm::monomial(f, 4, 0));
    EXPECT_EQ(w->a, (std::vector<Rep>{1, 1}));
    EXPECT_EQ(w->degenerate_support, 1u);

    EXPECT_FALSE(constancy_witness(tuple46(f, 1, mono(4, 0), mono(0, 6))));

    w = constancy_witness(tuple46(f, 1, zero(4), mono(1, 5)));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->ell, 6u);
    EXPECT_EQ(w->U, BinForm::monomial(f, 1, 5));
    EXPECT_EQ(w->a, (std::vector<Rep>{0, 1}));
    EXPECT_EQ(w->degenerate_support, 2u);
}

TEST(HomTupleTest, ConstancyWitnessReconstructs) {
    Field f = make_field(7);
    std::mt19937_64 rng(11);
    WeightVector lam({2, 4, 6});
    int found = 0;
    for (int trial = 0; trial < 200; ++trial) {
        // u_i = a_i U^(lam_i / 2) with deg U = 2n.
        const unsigned n = 1 + trial % 3;
        BinForm U = testing::random_form(f, 2 * n, rng);
        if (U.is_zero()) continue;
        U = U.monic();
        std::vector<BinForm> u;
        for (unsigned i = 0; i < lam.size(); ++i)
            u.push_back(U.pow(lam[i] / 2).scaled(trial % 4 == i ? 0 : testing::random_unit(f, rng)));
        HomTuple t(lam, n, u);
        auto w = constancy_witness(t);
        ASSERT_TRUE(w) << t.to_string();
        ++found;
        for (unsigned i = 0; i < lam.size(); ++i) EXPECT_EQ(w->U.pow(lam[i] / w->ell).scaled(w->a[i]), t[i]);
        EXPECT_EQ(w->degenerate_support, bf_distinct_roots(U));
    }
    EXPECT_GT(found, 100);
}

TEST(HomTupleTest, HilbertMumfordExamples) {
    Field f = make_field(13);
    EXPECT_EQ(hm_classify(tuple46(f, 1, mono(2, 2), mono(3, 3))), GitClass::StrictlySemistable);
    EXPECT_EQ(hm_classify(tuple46(f, 1, mono(4, 0), mono(0, 6))), GitClass::Stable);
    EXPECT_EQ(hm_classify(tuple46(f, 1, zero(4), mono(1, 5))), GitClass::Unstable);
    EXPECT_EQ(git_class_name(GitClass::StrictlySemistable), "STRICTLY_SEMISTABLE");
}

TEST(HomTupleTest, StabilizerVerdictExamples) {
    Field f = make_field(13);
    EXPECT_EQ(stabilizer_verdict(tuple46(f, 1, mono(4, 0), mono(0, 6))), StabilizerVerdict::FiniteReducedTame);
    EXPECT_EQ(stabilizer_verdict(tuple46(f, 1, zero(4), mono(1, 5))), StabilizerVerdict::NotFiniteReducedTame);
    HomTuple fam = tuple46(f, 1, mono(2, 2), mono(3, 3));
    EXPECT_EQ(stabilizer_verdict(HomTuple(fam.lam(), 1, {fam[0].scaled(3), fam[1].scaled(5)})),
              StabilizerVerdict::NotFiniteReducedTame);
    EXPECT_TRUE(stabilizer_regime(WeightVector({4, 6}), 1, 13));
    EXPECT_FALSE(stabilizer_regime(WeightVector({4, 6}), 1, 11));
    EXPECT_TRUE(stabilizer_regime(WeightVector({4, 6}), 1, 0));
    EXPECT_EQ(stabilizer_verdict(tuple46(make_field(5), 1, mono(4, 0), mono(0, 6))), StabilizerVerdict::OutOfRegime);
}

TEST(HomTupleTest, StabilizerExamples) {
    Field f = make_field(5);
    auto stab = pgl2_stabilizer(tuple46(f, 1, mono(4, 0), mono(0, 6)));
    for (Rep l = 1; l < 5; ++l)
        EXPECT_NE(std::find(stab.begin(), stab.end(), Moebius::diag(f, l)), stab.end()) << l;
    EXPECT_GE(stab.size(), 4u);

    HomTuple id(WeightVector({1, 1}), 1, {BinForm::monomial(f, 1, 0), BinForm::monomial(f, 0, 1)});
    auto s1 = pgl2_stabilizer(id);
    ASSERT_EQ(s1.size(), 1u);
    EXPECT_EQ(s1[0], Moebius::identity(f));
}

class HomTuplePropertyTest : public ::testing::TestWithParam<unsigned> {};

TEST_P(HomTuplePropertyTest, StabilizerIsGroupAndMatchesDirectCheck) {
    Field f = make_field(GetParam());
    std::mt19937_64 rng(GetParam());
    const auto group = pgl2_enumerate(f);
    for (int trial = 0; trial < 12; ++trial) {
        HomTuple t = degenerate_tuple(f, WeightVector({1, 2}), 1 + trial % 2, rng);
        auto stab = pgl2_stabilizer(t, 1);
        std::sort(stab.begin(), stab.end());
        std::vector<Moebius> direct;
        for (const auto& g : group)
            if (same_weighted_class(t, hom_substitute(t, g))) direct.push_back(g);
        std::sort(direct.begin(), direct.end());
        EXPECT_EQ(stab, direct) << t.to_string();
        for (const auto& g : stab)
            for (const auto& h : stab) EXPECT_TRUE(std::binary_search(stab.begin(), stab.end(), g * h));
        // Conjugate tuples have stabilizers of the same order.
        const Moebius g = random_moebius(f, rng);
        EXPECT_EQ(pgl2_stabilizer(hom_substitute(t, g), 1).size(), stab.size());
    }
}

TEST_P(HomTuplePropertyTest, HilbertMumfordInvariantsHold) {
    Field f = make_field(GetParam());
    std::mt19937_64 rng(100 + GetParam());
    const std::vector<std::pair<WeightVector, unsigned>> configs = {
        {WeightVector({4, 6}), 1}, {WeightVector({1, 3}), 1}, {WeightVector({1, 1}), 3}, {WeightVector({1, 2}), 2}};
    for (const auto& [lam, n] : configs) {
        bool all_odd = n % 2 == 1;
        for (unsigned w : lam.weights()) all_odd = all_odd && w % 2 == 1;
        for (int trial = 0; trial < 150; ++trial) {
            HomTuple t = trial % 2 ? random_tuple(f, lam, n, rng) : degenerate_tuple(f, lam, n, rng);
            const GitClass c = hm_classify(t);
            EXPECT_EQ(hm_classify(hom_substitute(t, random_moebius(f, rng))), c) << t.to_string();
            if (base_point_free(t)) EXPECT_EQ(c, GitClass::Stable) << t.to_string();
            if (all_odd) EXPECT_NE(c, GitClass::StrictlySemistable) << t.to_string();
        }
    }
}

TEST_P(HomTuplePropertyTest, HilbertMumfordMatchesEnumeration) {
    const unsigned p = GetParam();
    if (p > 7) GTEST_SKIP() << "enumeration oracle only for small p";
    Field f = make_field(p), f2 = make_field(p, 2);
    std::mt19937_64 rng(200 + p);
    // Degrees at most 2, so every root lies in F_{p^2}.
    const std::vector<std::pair<WeightVector, unsigned>> configs = {
        {WeightVector({1, 2}), 1}, {WeightVector({1, 1}), 2}, {WeightVector({1, 1, 2}), 1}};
    for (const auto& [lam, n] : configs)
        for (int trial = 0; trial < 100; ++trial) {
            HomTuple t = trial % 2 ? random_tuple(f, lam, n, rng) : degenerate_tuple(f, lam, n, rng);
            EXPECT_EQ(hm_classify(t), classify_by_enumeration(t, {f2})) << t.to_string();
        }
}

INSTANTIATE_TEST_SUITE_P(Primes, HomTuplePropertyTest, ::testing::Values(5u, 7u, 13u));

TEST(FatPointTest, Examples) {
    Field f5 = make_field(5);
    // X (X - Y)^5 Y: (X - Y)^5 = X^5 - Y^5 over F_5.
    BinForm fat = BinForm::monomial(f5, 1, 0) * form(f5, {-1, 0, 0, 0, 0, 1}) * BinForm::monomial(f5, 0, 1);
    EXPECT_EQ(fatpoint_finite_reduced(bf_factor(fat), 5), FatPointVerdict::NotFiniteReduced);
    for (unsigned p : {2u, 3u, 5u, 7u, 13u}) {
        Field f = make_field(p);
        BinForm three = BinForm::monomial(f, 1, 1) * form(f, {-1, 1});
        EXPECT_EQ(fatpoint_finite_reduced(bf_factor(three), p), FatPointVerdict::FiniteReduced) << p;
    }
    BinForm split = BinForm::monomial(f5, 1, 0) * form(f5, {1, 0, 1});
    EXPECT_EQ(fatpoint_finite_reduced(bf_factor(split), 5), FatPointVerdict::FiniteReduced);
    EXPECT_EQ(fatpoint_verdict_name(FatPointVerdict::NotFiniteReduced), "NOT_FINITE_REDUCED");
}

}  // namespace
}  // namespace wstack
