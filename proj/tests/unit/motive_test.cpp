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

#include <functional>
#include <random>

#include "wstack/counting.hpp"
#include "wstack/motive.hpp"

namespace wstack {
namespace {

MotiveExpr L(unsigned k = 1) { return MotiveExpr::L(k); }
MotiveExpr I(long v) { return MotiveExpr::integer(v); }

MotiveExpr random_expr(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-3, 3), d(0, 4);
    std::vector<mpz_class> num(d(rng) + 1), den(d(rng) + 1);
    for (auto& v : num) v = c(rng);
    for (auto& v : den) v = c(rng);
    num.back() = 1;
    den.back() = 1;
    return MotiveExpr(ZPoly(num), ZPoly(den));
}

TEST(ZPolyTest, Basics) {
    EXPECT_EQ(ZPoly::geometric(3), ZPoly({1, 1, 1, 1}));
    EXPECT_EQ(ZPoly::geometric(4, 2), ZPoly({1, 0, 1, 0, 1}));
    EXPECT_EQ(ZPoly::monomial(11) - ZPoly::monomial(9), ZPoly({0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1}));
    EXPECT_EQ((ZPoly::monomial(11) - ZPoly::monomial(9)).to_string(), "L^11 - L^9");
    EXPECT_EQ(ZPoly({1, 0, 2}).to_string(), "2*L^2 + 1");
    EXPECT_EQ(ZPoly().to_string(), "0");
    EXPECT_EQ(ZPoly({6, 4}).content(), 2);
    EXPECT_EQ(ZPoly({-1, 0, 1}).eval(5), 24);
    EXPECT_EQ(exact_quotient(ZPoly({0, -1, 0, 1}), ZPoly({-1, 1})), ZPoly({0, 1, 1}));
    EXPECT_THROW(exact_quotient(ZPoly({1, 0, 1}), ZPoly({-1, 1})), Error);
    EXPECT_EQ(primitive_gcd(ZPoly({-1, 0, 1}), ZPoly({-1, 1}) * ZPoly({2, 1})), ZPoly({-1, 1}));
}

TEST(MotiveExprTest, ArithmeticExamples) {
    EXPECT_EQ((L() - I(1)) * (L() + I(1)), L(2) - I(1));
    EXPECT_EQ(mexpr_arith(L() - I(1), L() + I(1), MotiveOp::Mul), L(2) - I(1));
    MotiveExpr q = (L(3) - L()) / (L() - I(1));
    EXPECT_TRUE(q.is_polynomial());
    EXPECT_EQ(q, L(2) + L());
    EXPECT_EQ(q.to_string(), "L^2 + L");
    MotiveExpr r = I(1) / (L() - I(1));
    EXPECT_FALSE(r.is_polynomial());
    EXPECT_EQ(r.to_string(), "(1)/(L - 1)");
    EXPECT_EQ(I(2) / I(4), MotiveExpr(ZPoly::constant(1), ZPoly::constant(2)));
    EXPECT_THROW(I(1) / MotiveExpr(), Error);
}

TEST(MotiveExprTest, NormalizationIsCanonical) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        MotiveExpr x = random_expr(rng), y = random_expr(rng), z = random_expr(rng);
        if (x.is_zero()) continue;
        EXPECT_EQ(x / x, I(1));
        EXPECT_EQ((x + y) * z, x * z + y * z);
        EXPECT_EQ((x - y) + y, x);
        if (!y.is_zero()) EXPECT_EQ((x * y) / y, x);
        // Specialization is a ring map away from poles.
        for (long q : {2L, 3L, 5L, 7L}) {
            try {
                EXPECT_EQ(specialize(x * y, q), specialize(x, q) * specialize(y, q));
                EXPECT_EQ(specialize(x + y, q), specialize(x, q) + specialize(y, q));
            } catch (const Error& e) {
                EXPECT_EQ(e.code(), ErrorCode::Pole);
            }
        }
    }
}

TEST(MotiveTest, GroupClasses) {
    EXPECT_EQ(motive_group(GroupName::SL2), L(3) - L());
    EXPECT_EQ(motive_group(GroupName::GL, 2), (L(2) - I(1)) * (L(2) - L()));
    EXPECT_EQ(motive_group(GroupName::PGL2), motive_group(GroupName::SL2));
    EXPECT_EQ(motive_group(GroupName::Gm), L() - I(1));
    EXPECT_EQ(motive_group(GroupName::GL, 1), L() - I(1));
    EXPECT_EQ(motive_bpgl2(), I(1) / (L(3) - L()));
    // Group classes count the finite groups.
    for (long q : {2L, 3L, 5L, 7L, 13L}) {
        EXPECT_EQ(specialize(motive_group(GroupName::GL, 2), q), group_order(GroupKind::GL2, q));
        EXPECT_EQ(specialize(motive_group(GroupName::PGL2), q), group_order(GroupKind::PGL2, q));
    }
}

TEST(MotiveTest, HomExamples) {
    EXPECT_EQ(motive_hom(WeightVector({4, 6}), 1), L(9) * (L(2) - I(1)));
    EXPECT_EQ(motive_hom(WeightVector({1, 1}), 1), L() * (L(2) - I(1)));
    EXPECT_EQ(specialize(motive_hom(WeightVector({1, 1}), 1), 5), 120);
    EXPECT_EQ(motive_hom(WeightVector({1, 3}), 1), L(3) * (L(2) - I(1)));
}

TEST(MotiveTest, ModuliExamples) {
    EXPECT_EQ(motive_moduli(WeightVector({4, 6}), 1).value, L(8));
    EXPECT_FALSE(motive_moduli(WeightVector({4, 6}), 1).empirical);
    EXPECT_EQ(motive_moduli(WeightVector({4, 6}), 1).value.to_string(), "L^8");
    EXPECT_EQ(motive_moduli(WeightVector({1, 3}), 1).value, L(2));
    EXPECT_TRUE(motive_moduli(WeightVector({4, 6}), 2).empirical);
    EXPECT_EQ(motive_ambient(WeightVector({4, 6}), 1), (L(12) - I(1)) / (L() * (L() - I(1)) * (L(2) - I(1))));
    EXPECT_EQ(rational_string(specialize(motive_ambient(WeightVector({4, 6}), 1), 5)), "5086263/10");
    EXPECT_EQ(motive_selfmap_moduli(2).value, L(2));
    EXPECT_FALSE(motive_selfmap_moduli(2).empirical);
    EXPECT_EQ(motive_selfmap_moduli(4).value, L(6));
    EXPECT_TRUE(motive_selfmap_moduli(3).empirical);
}

TEST(MotiveTest, LowDimensionalTable) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<unsigned> w(1, 7);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned n = 2 * (trial % 4) + 1;
        WeightVector two({w(rng), w(rng)}), three({w(rng), w(rng), w(rng)}), four({w(rng), w(rng), w(rng), w(rng)});
        EXPECT_EQ(motive_moduli(two, n).value, L(two.total() * n - 2));
        EXPECT_EQ(motive_moduli(three, n).value, L(three.total() * n - 3) * (L(2) + L() + I(1)));
        EXPECT_EQ(motive_moduli(four, n).value,
                  L(four.total() * n - 4) * (L(4) + L(3) + I(2) * L(2) + L() + I(1)));
    }
}

TEST(MotiveTest, QuotientMatchesClosedFormEverywhere) {
    // Every weight vector with entries <= 7 and up to five coordinates, odd n <= 9.
    int checked = 0;
    std::vector<unsigned> w;
    std::function<void(unsigned)> rec = [&](unsigned len) {
        if (w.size() == len) {
            WeightVector lam(w);
            for (unsigned n = 1; n <= 9; n += 2) {
                EXPECT_EQ(motive_hom(lam, n) / motive_group(GroupName::PGL2), motive_moduli_closed_form(lam, n))
                    << lam.to_string() << " n=" << n;
                ++checked;
            }
            return;
        }
        for (unsigned x = w.empty() ? 1 : w.back(); x <= 7; ++x) {
            w.push_back(x);
            rec(len);
            w.pop_back();
        }
    };
    for (unsigned len = 2; len <= 5; ++len) rec(len);
    EXPECT_GT(checked, 1000);
}

TEST(MotiveTest, SpecializeExamples) {
    EXPECT_EQ(specialize(L(8), 5), 390625);
    EXPECT_EQ(specialize((L(2) - I(1)) / (L() - I(1)), 7), 8);
    try {
        specialize(I(1) / (L() - I(1)), 1);
        FAIL() << "expected POLE";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Pole);
    }
}

TEST(MotiveTest, LaurentExpansion) {
    // The ambient class of the (4,6), n = 1 family is L^8 + L^6 + ... at infinity.
    const MotiveExpr amb = motive_ambient(WeightVector({4, 6}), 1);
    LaurentExpansion e = laurent_at_infinity(amb, 4);
    EXPECT_EQ(e.top, 8);
    ASSERT_EQ(e.coeffs.size(), 4u);
    EXPECT_EQ(e.coeffs[0], 1);
    // The truncated series approximates the value at a large q to within O(q^(top - 4)).
    const long q = 1000003;
    mpq_class approx = 0;
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), q, static_cast<unsigned long>(e.top - static_cast<int>(i)));
        approx += e.coeffs[i] * p;
    }
    const mpq_class exact = specialize(amb, q);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), q, static_cast<unsigned long>(e.top - 4));
    mpq_class err = (exact - approx) / scale;
    EXPECT_LT(abs(err), 10);
}

TEST(MotiveTest, RationalStrings) {
    EXPECT_EQ(rational_string(mpq_class(390625)), "390625/1");
    EXPECT_EQ(rational_string(mpq_class(-6, 4)), "-3/2");
    EXPECT_EQ(parse_rational("5086263/10"), mpq_class(5086263, 10));
    EXPECT_EQ(parse_rational("12"), mpq_class(12));
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("0.5"), Error);
}

}  // namespace
}  // namespace wstack
