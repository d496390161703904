/*
   Copyright 2026 The polydiam authors

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

#include <cmath>
#include <cstdint>

#include "polydiam/poly_enum.hpp"

using namespace polydiam;

TEST(MoebiusTest, KnownValues) {
    EXPECT_EQ(moebius(1), 1);
    EXPECT_EQ(moebius(2), -1);
    EXPECT_EQ(moebius(3), -1);
    EXPECT_EQ(moebius(4), 0);
    EXPECT_EQ(moebius(6), 1);
    EXPECT_EQ(moebius(12), 0);
    EXPECT_EQ(moebius(30), -1);
    EXPECT_EQ(moebius(49), 0);
    EXPECT_EQ(moebius(210), 1);
    EXPECT_THROW(moebius(0), precondition_error);
}

TEST(MoebiusTest, DivisorSumIsIndicator) {
    // sum over d | n of mu(d) = [n == 1], a classical sanity identity.
    for (std::uint32_t n = 1; n <= 200; ++n) {
        int sum = 0;
        for (std::uint32_t e : divisors_ascending(n)) sum += moebius(e);
        EXPECT_EQ(sum, n == 1 ? 1 : 0) << n;
    }
}

TEST(CountIrreduciblesTest, FrozenValues) {
    EXPECT_EQ(count_irreducibles(2, 1), 2);
    EXPECT_EQ(count_irreducibles(2, 2), 1);
    EXPECT_EQ(count_irreducibles(2, 3), 2);
    EXPECT_EQ(count_irreducibles(2, 4), 3);
    EXPECT_EQ(count_irreducibles(3, 1), 3);
    EXPECT_EQ(count_irreducibles(3, 2), 3);
    EXPECT_EQ(count_irreducibles(5, 4), 150);
    EXPECT_EQ(count_irreducibles(7, 6), 19544);
    EXPECT_EQ(count_irreducibles(2, 18), 14532);
    EXPECT_EQ(count_irreducibles(3, 11), 16104);
}

TEST(EnumerateIrreduciblesTest, CanonicalOrderSmallCases) {
    BaseField F2(2);
    auto i22 = enumerate_irreducibles(F2, 2);
    ASSERT_EQ(i22.size(), 1u);
    EXPECT_EQ(i22[0].to_string(), "1,1,1");

    auto i23 = enumerate_irreducibles(F2, 3);
    ASSERT_EQ(i23.size(), 2u);
    EXPECT_EQ(i23[0].to_string(), "1,1,0,1");
    EXPECT_EQ(i23[1].to_string(), "1,0,1,1");

    BaseField F3(3);
    auto i31 = enumerate_irreducibles(F3, 1);
    ASSERT_EQ(i31.size(), 3u);
    EXPECT_EQ(i31[0].to_string(), "0,1");
    EXPECT_EQ(i31[1].to_string(), "1,1");
    EXPECT_EQ(i31[2].to_string(), "2,1");
}

TEST(EnumerateIrreduciblesTest, MatchesMoebiusCount) {
    for (std::uint64_t q : {2, 3, 4, 5, 7}) {
        BaseField F = BaseField::from_order(q);
        for (std::uint32_t d = 1; d <= 6; ++d) {
            if (boost::multiprecision::pow(BigInt(q), d) > 100000) continue;
            auto irr = enumerate_irreducibles(F, d);
            EXPECT_EQ(BigInt(irr.size()), count_irreducibles(q, d)) << "q=" << q << " d=" << d;
            // canonical order is strictly increasing by code
            for (std::size_t i = 1; i < irr.size(); ++i) {
                EXPECT_LT(irr[i - 1].code(q), irr[i].code(q));
            }
        }
    }
}

TEST(EnumerateIrreduciblesTest, ScreenedLargeEnumerationMatchesCount) {
    // d >= 6 exercises the trial-division screen path.
    BaseField F2(2);
    EXPECT_EQ(BigInt(enumerate_irreducibles(F2, 8).size()), count_irreducibles(2, 8));
    EXPECT_EQ(BigInt(enumerate_irreducibles(F2, 10).size()), count_irreducibles(2, 10));
    BaseField F3(3);
    EXPECT_EQ(BigInt(enumerate_irreducibles(F3, 7).size()), count_irreducibles(3, 7));
}

TEST(EnumerateIrreduciblesTest, CapIsEnforced) {
    BaseField F2(2);
    try {
        enumerate_irreducibles(F2, 30, 1000);
        FAIL() << "expected resource_error";
    } catch (const resource_error& e) {
        EXPECT_NE(std::string(e.what()).find("1000"), std::string::npos);
    }
}

TEST(EnumeratePrimePowersTest, ExactSmallCatalog) {
    BaseField F2(2);
    auto p22 = enumerate_prime_powers(F2, 2);
    ASSERT_EQ(p22.size(), 3u);
    EXPECT_EQ(p22[0].poly.to_string(), "0,0,1");  // X^2
    EXPECT_EQ(p22[0].base.to_string(), "0,1");
    EXPECT_EQ(p22[0].k, 2u);
    EXPECT_EQ(p22[0].lambda, 1u);
    EXPECT_EQ(p22[1].poly.to_string(), "1,0,1");  // (X+1)^2
    EXPECT_EQ(p22[1].base.to_string(), "1,1");
    EXPECT_EQ(p22[1].lambda, 1u);
    EXPECT_EQ(p22[2].poly.to_string(), "1,1,1");  // irreducible itself
    EXPECT_EQ(p22[2].k, 1u);
    EXPECT_EQ(p22[2].lambda, 2u);
    std::uint64_t lambda_sum = 0;
    for (const auto& w : p22) lambda_sum += w.lambda;
    EXPECT_EQ(lambda_sum, 4u);

    auto p21 = enumerate_prime_powers(F2, 1);
    ASSERT_EQ(p21.size(), 2u);
    EXPECT_EQ(p21[0].poly.to_string(), "0,1");
    EXPECT_EQ(p21[1].poly.to_string(), "1,1");

    BaseField F3(3);
    EXPECT_EQ(enumerate_prime_powers(F3, 2).size(), 6u);  // #I_1 + #I_2 = 3 + 3
}

TEST(EnumeratePrimePowersTest, LambdaMassEqualsQToD) {
    for (std::uint64_t q : {2, 3, 4, 5}) {
        BaseField F = BaseField::from_order(q);
        for (std::uint32_t d = 1; d <= 5; ++d) {
            if (boost::multiprecision::pow(BigInt(q), d) > 100000) continue;
            auto pp = enumerate_prime_powers(F, d);
            BigInt lambda_sum = 0;
            for (const auto& w : pp) lambda_sum += w.lambda;
            EXPECT_EQ(lambda_sum, boost::multiprecision::pow(BigInt(q), d)) << "q=" << q << " d=" << d;
        }
    }
}

TEST(EnumeratePrimePowersTest, StructuralInvariants) {
    for (std::uint64_t q : {2, 3, 5}) {
        BaseField F = BaseField::from_order(q);
        for (std::uint32_t d = 1; d <= 6; ++d) {
            if (boost::multiprecision::pow(BigInt(q), d) > 100000) continue;
            auto pp = enumerate_prime_powers(F, d);
            // #P_d = sum over e | d of #I_e
            BigInt expected_count = 0;
            for (std::uint32_t e : divisors_ascending(d)) expected_count += count_irreducibles(q, e);
            EXPECT_EQ(BigInt(pp.size()), expected_count) << "q=" << q << " d=" << d;
            for (const auto& w : pp) {
                EXPECT_EQ(w.lambda * w.k, d);
                EXPECT_EQ(static_cast<std::uint32_t>(w.base.degree()), w.lambda);
                EXPECT_TRUE(irreducibility_test(w.base, F));
                EXPECT_EQ(poly_pow(w.base, w.k, F), w.poly);  // re-expansion
                EXPECT_EQ(static_cast<std::uint32_t>(w.poly.degree()), d);
            }
        }
    }
}

TEST(EnumeratePrimePowersTest, CountBrackets) {
    // d * #I_d >= q^d - 2 q^{d/2} (lower bound on irreducibles), and for
    // d >= 2 the prime-power count satisfies
    // q^d <= d * #P_d <= q^d + 4 q^{floor(d/2)}, both in exact integers.
    for (std::uint64_t q : {2, 3, 4, 5, 7}) {
        BaseField F = BaseField::from_order(q);
        for (std::uint32_t d = 1; d <= 6; ++d) {
            BigInt qd = boost::multiprecision::pow(BigInt(q), d);
            if (qd > 100000) continue;
            BigInt icount = BigInt(enumerate_irreducibles(F, d).size());
            long double lhs = static_cast<long double>(icount.convert_to<std::uint64_t>()) * d;
            long double rhs = static_cast<long double>(qd.convert_to<std::uint64_t>()) -
                              2.0L * std::sqrt(static_cast<long double>(qd.convert_to<std::uint64_t>()));
            EXPECT_GE(lhs, rhs) << "q=" << q << " d=" << d;
            if (d >= 2) {
                BigInt pcount = BigInt(enumerate_prime_powers(F, d).size());
                EXPECT_GE(pcount * d, qd) << "q=" << q << " d=" << d;
                EXPECT_LE(pcount * d, qd + 4 * boost::multiprecision::pow(BigInt(q), d / 2))
                    << "q=" << q << " d=" << d;
            }
        }
    }
}

TEST(PolyCatalogTest, BundlesBothSets) {
    BaseField F5(5);
    PolyCatalog cat = make_catalog(F5, 2);
    EXPECT_EQ(cat.q, 5u);
    EXPECT_EQ(cat.d, 2u);
    EXPECT_EQ(BigInt(cat.irreducibles.size()), count_irreducibles(5, 2));  // 10
    EXPECT_EQ(cat.prime_powers.size(), cat.irreducibles.size() + 5);       // + #I_1
}
