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

#include <random>

#include "test_support.hpp"
#include "wstack/counting.hpp"
#include "wstack/motive.hpp"

namespace wstack {
namespace {

CountModel hom(std::vector<unsigned> lam, unsigned n, Stratum s) { return CountModel::hom(WeightVector(lam), n, s); }

mpz_class pw(unsigned long q, unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
}

TEST(CountingTest, Names) {
    EXPECT_EQ(parse_stratum("sf"), Stratum::USf);
    EXPECT_EQ(parse_stratum("U_MIN"), Stratum::UMin);
    EXPECT_EQ(parse_stratum("basepoint_free"), Stratum::BasepointFree);
    EXPECT_EQ(parse_stratum("semistable"), Stratum::GitSemistable);
    EXPECT_THROW(parse_stratum("nope"), Error);
    EXPECT_EQ(stratum_name(Stratum::UDelta), "U_DELTA");
    EXPECT_EQ(parse_method("sieve"), Method::Sieve);
    EXPECT_THROW(parse_method("fast"), Error);
    EXPECT_EQ(method_name(Method::Brute), "BRUTE");
    EXPECT_EQ(model_kind_name(ModelKind::SelfMap), "SELFMAP");
    EXPECT_EQ(group_kind_name(GroupKind::PGL2), "PGL2");
}

TEST(CountingTest, ModelValidation) {
    EXPECT_THROW(hom({1, 3}, 1, Stratum::USf), Error);
    EXPECT_THROW(hom({4, 6}, 0, Stratum::USf), Error);
    EXPECT_THROW(hom({4, 6}, 1, Stratum::Morphism), Error);
    EXPECT_THROW(CountModel::selfmap(2, Stratum::UMin), Error);
    CountModel m = hom({4, 6}, 1, Stratum::USf);
    EXPECT_EQ(m.coefficient_count(), 12u);
    EXPECT_EQ(m.degrees(), (std::vector<unsigned>{4, 6}));
    EXPECT_TRUE(m.is_weierstrass_shape());
    EXPECT_EQ(m.to_string(), "HOM_WEIGHTED((4,6),1) U_SF");
    EXPECT_THROW(cone_count(m, make_field(3), Method::Sieve), Error);
    CountOptions tight;
    tight.brute_budget = 1000;
    try {
        cone_count(m, make_field(5), Method::Brute, tight);
        FAIL() << "expected BOUND_EXCEEDED";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BoundExceeded);
    }
    EXPECT_THROW(cone_count(hom({1, 1}, 1, Stratum::GitStable), make_field(5), Method::Sieve), Error);
    EXPECT_THROW(cone_count(hom({1, 1, 1}, 1, Stratum::BasepointFree), make_field(5), Method::Sieve), Error);
}

TEST(CountingTest, GroupOrders) {
    EXPECT_EQ(group_order(GroupKind::GL2, 5), 480);
    EXPECT_EQ(group_order(GroupKind::PGL2, 5), 120);
    EXPECT_EQ(group_order(GroupKind::Gm, 5), 4);
    EXPECT_EQ(weighted_count(187500000, 5, GroupKind::GL2), 390625);
    EXPECT_EQ(weighted_count(480, 5, GroupKind::PGL2), 4);
    EXPECT_EQ(weighted_count(480, 5, GroupKind::PGL2) / 4, 1);
    EXPECT_EQ(weighted_count(0, 7, GroupKind::GL2), 0);
}

TEST(CountingTest, CountExamples) {
    Field f5 = make_field(5);
    EXPECT_EQ(cone_count(CountModel::selfmap(1, Stratum::Morphism), f5, Method::Brute), 480);
    EXPECT_EQ(cone_count(CountModel::selfmap(1, Stratum::Morphism), f5, Method::Sieve), 480);
    EXPECT_EQ(cone_count(hom({1, 3}, 1, Stratum::BasepointFree), f5, Method::Brute), 12000);
    EXPECT_EQ(cone_count(hom({1, 3}, 1, Stratum::BasepointFree), f5, Method::Sieve), 12000);
    EXPECT_EQ(cone_count(hom({4, 6}, 1, Stratum::USf), f5, Method::Sieve), 187500000);
    EXPECT_EQ(cone_count(hom({2, 3}, 1, Stratum::AllNonzero), f5, Method::Brute), pw(5, 7) - 1);
    EXPECT_EQ(cone_count(hom({4, 6}, 1, Stratum::AllNonzero), f5, Method::Sieve), pw(5, 12) - 1);
}

struct SmallModel {
    std::vector<unsigned> lam;
    unsigned n;
};

class CountingPropertyTest : public ::testing::TestWithParam<unsigned> {};

TEST_P(CountingPropertyTest, BasepointFreeConeMatchesHomClass) {
    const unsigned q = GetParam();
    Field f = make_field(q);
    const std::vector<SmallModel> models = {{{1, 1}, 1}, {{1, 1}, 2}, {{1, 2}, 1}, {{1, 3}, 1}, {{2, 2}, 1},
                                            {{1, 1, 1}, 1}, {{2, 3}, 1}};
    for (const auto& sm : models) {
        CountModel m = hom(sm.lam, sm.n, Stratum::BasepointFree);
        if (pw(q, m.coefficient_count()) > 3000000) continue;
        const mpz_class raw = cone_count(m, f, Method::Brute);
        CountOptions slow;
        slow.fast_kernel = false;
        EXPECT_EQ(cone_count(m, f, Method::Brute, slow), raw) << m.to_string();
        if (sm.lam.size() == 2) EXPECT_EQ(cone_count(m, f, Method::Sieve), raw) << m.to_string();
        EXPECT_EQ(mpq_class(raw) / (q - 1), specialize(motive_hom(m.lam, m.n), q)) << m.to_string();
    }
}

TEST_P(CountingPropertyTest, SelfMapCounts) {
    const unsigned q = GetParam();
    if (q > 7) GTEST_SKIP() << "brute force only for small q";
    Field f = make_field(q);
    for (unsigned n : {1u, 2u}) {
        CountModel m = CountModel::selfmap(n, Stratum::Morphism);
        const mpz_class raw = cone_count(m, f, Method::Brute);
        EXPECT_EQ(cone_count(m, f, Method::Sieve), raw);
        if (n == 2) EXPECT_EQ(weighted_count(raw, q, GroupKind::GL2), mpq_class(q * q));
        else EXPECT_EQ(raw, group_order(GroupKind::GL2, q));
    }
}

TEST_P(CountingPropertyTest, SieveRowsMatchBruteRows) {
    const unsigned q = GetParam();
    if (q > 7) GTEST_SKIP() << "brute rows only for small q";
    Field f = make_field(q);
    std::mt19937_64 rng(q);
    const int rows = q == 5 ? 12 : 2;
    for (int trial = 0; trial < rows; ++trial) {
        // Half the rows carry a repeated factor so the minimality branch is exercised.
        BinForm A = testing::random_form(f, 4, rng);
        if (trial % 2 == 0) {
            const BinForm ell = testing::random_form(f, 1, rng);
            if (!ell.is_zero()) A = ell.pow(trial % 4 == 0 ? 4 : 2) * testing::random_form(f, trial % 4 == 0 ? 0 : 2, rng);
        }
        if (trial == 1) A = BinForm(f, 4);
        for (Stratum s : {Stratum::UDelta, Stratum::UMin, Stratum::USf}) {
            CountModel m = hom({4, 6}, 1, s);
            EXPECT_EQ(companion_count(m, A, Method::Sieve), companion_count(m, A, Method::Brute))
                << stratum_name(s) << " A=" << A;
        }
    }
    for (int trial = 0; trial < 20; ++trial) {
        const BinForm A = testing::random_form(f, 1, rng);
        CountModel m = hom({1, 3}, 1, Stratum::BasepointFree);
        EXPECT_EQ(companion_count(m, A, Method::Sieve), companion_count(m, A, Method::Brute)) << A;
    }
}

TEST_P(CountingPropertyTest, WeierstrassSieveSatisfiesIdentities) {
    const unsigned q = GetParam();
    Field f = make_field(q);
    const CountModel sf = hom({4, 6}, 1, Stratum::USf), mn = hom({4, 6}, 1, Stratum::UMin),
                     dl = hom({4, 6}, 1, Stratum::UDelta);
    const mpz_class csf = cone_count(sf, f, Method::Sieve), cmin = cone_count(mn, f, Method::Sieve),
                    cdl = cone_count(dl, f, Method::Sieve);
    EXPECT_EQ(csf, mpz_class(q - 1) * pw(q, 9) * (q * q - 1));
    EXPECT_EQ(weighted_count(csf, q, GroupKind::GL2), mpq_class(pw(q, 8)));
    EXPECT_LE(csf, cmin);
    EXPECT_LE(cmin, cdl);
    EXPECT_LT(cdl, pw(q, 12) - 1);
    const mpq_class amb = specialize(motive_ambient(WeightVector({4, 6}), 1), q);
    EXPECT_LE(weighted_count(cdl, q, GroupKind::GL2), amb);
}

INSTANTIATE_TEST_SUITE_P(Primes, CountingPropertyTest, ::testing::Values(5u, 7u, 13u));

TEST(CountingTest, ReportExamples) {
    Field f5 = make_field(5);
    CountReport r = verify_report(hom({4, 6}, 1, Stratum::USf), f5, Method::Sieve);
    ASSERT_TRUE(r.predicted);
    EXPECT_EQ(*r.predicted, 390625);
    EXPECT_EQ(r.match, true);
    EXPECT_FALSE(r.empirical);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.field, "F_5");
    EXPECT_EQ(r.group_order, 480);

    r = verify_report(CountModel::selfmap(2, Stratum::Morphism), f5, Method::Brute);
    EXPECT_EQ(r.weighted_count, 25);
    EXPECT_EQ(r.match, true);

    r = verify_report(hom({4, 6}, 1, Stratum::UMin), f5, Method::Sieve);
    EXPECT_FALSE(r.predicted);
    ASSERT_TRUE(r.bounds);
    EXPECT_TRUE(r.bounds->satisfied);
    EXPECT_EQ(r.bounds->lower, 390625);
    EXPECT_EQ(r.bounds->upper, mpq_class(5086263, 10));

    r = verify_report(hom({1, 3}, 2, Stratum::BasepointFree), make_field(5), Method::Sieve);
    EXPECT_TRUE(r.empirical);
    EXPECT_FALSE(r.match);
    EXPECT_TRUE(r.formula_value);
    EXPECT_TRUE(r.ok());

    r = verify_report(CountModel::selfmap(1, Stratum::Morphism), f5, Method::Brute);
    EXPECT_TRUE(r.empirical);
    EXPECT_EQ(r.formula_value, mpq_class(1));

    CountReport a = verify_report(hom({1, 3}, 1, Stratum::BasepointFree), f5, Method::Brute);
    CountReport b = a;
    b.wall_time.reset();
    EXPECT_EQ(a, b);
    b.raw_cone_count += 1;
    EXPECT_FALSE(a == b);
}

TEST(CountingTest, BurnsideExamples) {
    Field f5 = make_field(5);
    for (const CountModel& m : {CountModel::selfmap(1, Stratum::Morphism), hom({1, 1}, 1, Stratum::BasepointFree),
                                hom({1, 3}, 1, Stratum::BasepointFree), hom({1, 1}, 1, Stratum::GitStable)}) {
        BurnsideResult r = burnside_check(m, f5);
        EXPECT_TRUE(r.consistent) << m.to_string();
        EXPECT_EQ(r.orbit_sum, r.cone_ratio) << m.to_string();
    }
    BurnsideOptions fault;
    fault.stabilizer_offset = 1;
    EXPECT_FALSE(burnside_check(CountModel::selfmap(1, Stratum::Morphism), f5, fault).consistent);
}

TEST(CountingTest, CountsDoNotDependOnWorkerCount) {
    CountOptions one, many;
    one.workers = 1;
    many.workers = 3;
    const Field f7 = make_field(7), f9 = make_field(3, 2);
    for (Stratum s : {Stratum::BasepointFree, Stratum::GitStable}) {
        const CountModel m = hom({1, 3}, 1, s);
        EXPECT_EQ(cone_count(m, f7, Method::Brute, one), cone_count(m, f7, Method::Brute, many));
    }
    one.fast_kernel = many.fast_kernel = false;
    const CountModel m = hom({1, 2}, 1, Stratum::BasepointFree);
    EXPECT_EQ(cone_count(m, f9, Method::Brute, one), cone_count(m, f9, Method::Brute, many));
}

}  // namespace
}  // namespace wstack
