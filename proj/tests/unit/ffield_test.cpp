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
#include <set>

#include "wstack/ffield.hpp"

namespace wstack {
namespace {

// Independent irreducibility check for a monic quadratic: no root in F_p.
bool quadratic_has_root(std::uint64_t p, std::uint64_t c0, std::uint64_t c1) {
    for (std::uint64_t x = 0; x < p; ++x)
        if ((x * x + c1 * x + c0) % p == 0) return true;
    return false;
}

TEST(FieldTest, PrimeField) {
    Field f = make_field(5);
    EXPECT_EQ(f.characteristic(), 5u);
    EXPECT_EQ(f.degree(), 1u);
    EXPECT_EQ(f.order(), 5u);
    EXPECT_EQ(f.name(), "F_5");
    EXPECT_EQ(f, make_field(5, 1));
}

TEST(FieldTest, QuadraticModulusIsSmallestIrreducible) {
    for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
        // Scan t^2 + c1 t + c0 by the integer c0 + c1 p.
        std::vector<Rep> expected;
        for (std::uint64_t code = 0; code < p * p; ++code) {
            std::uint64_t c0 = code % p, c1 = code / p;
            if (!quadratic_has_root(p, c0, c1)) {
                expected = {static_cast<Rep>(c0), static_cast<Rep>(c1), 1};
                break;
            }
        }
        Field f = make_field(p, 2);
        EXPECT_EQ(f.modulus(), expected) << "p = " << p;
        EXPECT_EQ(f.order(), p * p);
    }
    EXPECT_EQ(make_field(5, 2).modulus(), (std::vector<Rep>{2, 0, 1}));
}

TEST(FieldTest, Errors) {
    EXPECT_THROW(make_field(4), Error);
    try {
        make_field(4);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPrime);
    }
    EXPECT_THROW(make_field(1), Error);
    EXPECT_THROW(make_field(5, 0), Error);
    try {
        make_field(7, 20);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BoundExceeded);
    }
    EXPECT_THROW(parse_field("25"), Error);
    EXPECT_THROW(parse_field("x"), Error);
    EXPECT_EQ(parse_field("5^2"), make_field(5, 2));
    EXPECT_EQ(parse_field("13"), make_field(13));
}

TEST(FieldTest, Inverse) {
    Field f = make_field(5);
    EXPECT_EQ(elem_inv(f.elem(2)).rep(), 3u);
    EXPECT_EQ(elem_inv(f.one()), f.one());
    EXPECT_THROW(elem_inv(f.zero()), Error);
    for (Field g : {make_field(5, 2), make_field(7, 3), make_field(2, 4), make_field(3, 5)}) {
        for (const auto& x : field_enumerate(g)) {
            if (x.is_zero()) continue;
            EXPECT_TRUE((x * elem_inv(x)).is_one());
        }
    }
}

TEST(FieldTest, Enumerate) {
    Field f5 = make_field(5);
    auto e = field_enumerate(f5);
    ASSERT_EQ(e.size(), 5u);
    EXPECT_EQ(e[0].rep(), 0u);
    EXPECT_EQ(e[1].rep(), 1u);
    EXPECT_EQ(field_enumerate(make_field(5, 2)).size(), 25u);
    FieldElem sum = make_field(7).zero();
    for (const auto& x : field_enumerate(make_field(7))) sum = sum + x;
    EXPECT_TRUE(sum.is_zero());
    EXPECT_THROW(field_enumerate(make_field(5, 3), 100), Error);
}

TEST(FieldTest, MixedFieldsRejected) {
    Field a = make_field(5), b = make_field(7);
    EXPECT_THROW(a.one() + b.one(), Error);
}

class FieldAxiomsTest : public ::testing::TestWithParam<std::pair<std::uint64_t, unsigned>> {};

TEST_P(FieldAxiomsTest, RandomTriples) {
    auto [p, k] = GetParam();
    Field f = make_field(p, k);
    std::mt19937_64 rng(p * 100 + k);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
    for (int i = 0; i < 1000; ++i) {
        FieldElem a = f.elem(static_cast<Rep>(pick(rng)));
        FieldElem b = f.elem(static_cast<Rep>(pick(rng)));
        FieldElem c = f.elem(static_cast<Rep>(pick(rng)));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a + (-a), f.zero());
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), f.one());
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    }
}

TEST_P(FieldAxiomsTest, Frobenius) {
    auto [p, k] = GetParam();
    Field f = make_field(p, k);
    auto all = field_enumerate(f);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (const auto& x : all) {
        EXPECT_EQ(x.pow(f.order()), x);
        FieldElem r = f.elem(f.pth_root(x.rep()));
        EXPECT_EQ(r.pow(p), x);
        const auto& y = all[pick(rng)];
        EXPECT_EQ((x + y).pow(p), x.pow(p) + y.pow(p));
        EXPECT_EQ((x * y).pow(p), x.pow(p) * y.pow(p));
    }
}

TEST_P(FieldAxiomsTest, PowAgreesWithRepeatedProduct) {
    auto [p, k] = GetParam();
    Field f = make_field(p, k);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
    for (int i = 0; i < 100; ++i) {
        Rep a = static_cast<Rep>(pick(rng));
        Rep acc = 1;
        for (unsigned e = 0; e < 40; ++e) {
            EXPECT_EQ(f.pow(a, e), acc);
            acc = f.mul(acc, a);
        }
    }
}

TEST_P(FieldAxiomsTest, NthRoots) {
    auto [p, k] = GetParam();
    Field f = make_field(p, k);
    for (unsigned e : {2u, 3u, 4u, 6u}) {
        std::set<Rep> powers;
        for (const auto& x : field_enumerate(f)) powers.insert(x.pow(e).rep());
        for (const auto& x : field_enumerate(f)) {
            auto r = f.nth_root(x.rep(), e);
            EXPECT_EQ(r.has_value(), powers.count(x.rep()) == 1);
            if (r) EXPECT_EQ(f.pow(*r, e), x.rep());
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxiomsTest,
                         ::testing::Values(std::make_pair(5u, 1u), std::make_pair(7u, 1u), std::make_pair(13u, 1u),
                                           std::make_pair(5u, 2u), std::make_pair(7u, 2u), std::make_pair(2u, 3u),
                                           std::make_pair(3u, 4u), std::make_pair(5u, 3u)));

TEST(FieldTest, DeterministicAcrossCalls) {
    Field a = make_field(7, 3);
    std::vector<Rep> m = a.modulus();
    Field b = make_field(7, 3);
    EXPECT_EQ(m, b.modulus());
    EXPECT_EQ(a.name(), "F_7^3");
}

}  // namespace
}  // namespace wstack
