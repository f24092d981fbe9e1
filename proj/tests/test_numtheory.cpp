#include <numeric>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "theta3/error.hpp"
#include "theta3/numtheory.hpp"

namespace theta3 {
namespace {

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(26), (Factorization{{{2, 1}, {13, 1}}}));
  EXPECT_EQ(factorize(80), (Factorization{{{2, 4}, {5, 1}}}));
  EXPECT_TRUE(factorize(1).prime_powers.empty());
}

TEST(Factorize, RoundTripUpToOneMillion) {
  for (std::uint64_t m = 1; m <= 1'000'000; ++m) {
    const auto f = factorize(m);
    ASSERT_EQ(f.value(), m);
    for (const auto& [p, e] : f.prime_powers) ASSERT_TRUE(is_prime(p)) << p;
  }
}

TEST(Factorize, GroupOrdersOfAllSupportedFields) {
  for (int n = 1; n <= 40; ++n) {
    const std::uint64_t m = pow3(n) - 1;
    const auto f = factorize(m);
    EXPECT_EQ(f.value(), m) << "n=" << n;
    for (const auto& [p, e] : f.prime_powers) EXPECT_TRUE(is_prime(p)) << p;
  }
  EXPECT_EQ(factorize(pow3(40) - 1),
            (Factorization{{{2, 5}, {5, 2}, {11, 2}, {41, 1}, {61, 1}, {1181, 1}, {42521761, 1}}}));
}

TEST(Factorize, SemiprimeNeedsRho) {
  const std::uint64_t p = 1'000'000'007ULL, q = 998'244'353ULL;
  EXPECT_EQ(factorize(p * q), (Factorization{{{q, 1}, {p, 1}}}));
}

TEST(IsPrime, SmallRangeAgreesWithTrialDivision) {
  for (std::uint64_t m = 0; m < 20'000; ++m) {
    bool prime = m >= 2;
    for (std::uint64_t d = 2; d * d <= m && prime; ++d) prime = m % d != 0;
    ASSERT_EQ(is_prime(m), prime) << m;
  }
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(OddDivisors, Examples) {
  EXPECT_EQ(odd_divisors_gt1(factorize(26)), (std::vector<std::uint64_t>{13}));
  EXPECT_TRUE(odd_divisors_gt1(factorize(8)).empty());
  EXPECT_EQ(odd_divisors_gt1(factorize(242)), (std::vector<std::uint64_t>{11, 121}));
}

TEST(EulerPhi, Examples) {
  EXPECT_EQ(euler_phi(std::uint64_t{13}), 12u);
  EXPECT_EQ(euler_phi(std::uint64_t{1}), 1u);
  EXPECT_EQ(euler_phi(std::uint64_t{121}), 110u);
}

TEST(EulerPhi, AgreesWithCounting) {
  for (std::uint64_t d = 1; d <= 3000; ++d) ASSERT_EQ(euler_phi(d), oracle::phi_by_counting(d)) << d;
}

TEST(EulerPhi, OddDivisorSumIsOddPart) {
  for (std::uint64_t m = 1; m <= 10'000; ++m) {
    std::uint64_t sum = 0;
    for (auto d : divisors(factorize(m))) {
      if (d % 2 == 1) sum += euler_phi(d);
    }
    std::uint64_t odd = m;
    while (odd % 2 == 0) odd /= 2;
    ASSERT_EQ(sum, odd) << m;
  }
}

TEST(OrdMod, Examples) {
  EXPECT_EQ(ord_mod(-2, 13), 12u);
  EXPECT_EQ(ord_mod(-2, 5), 4u);
  EXPECT_EQ(ord_mod(-2, 11), 5u);
  EXPECT_EQ(ord_mod(-2, 121), 55u);
  EXPECT_EQ(ord_mod(3, 1), 1u);
  try {
    (void)ord_mod(6, 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCoprime);
  }
}

TEST(OrdMod, AgreesWithPoweringAndDividesPhi) {
  for (std::uint64_t d = 3; d <= 10'000; d += 2) {
    const auto k = ord_mod(-2, d);
    ASSERT_EQ(euler_phi(d) % k, 0u) << d;
    if (d <= 3000) {
      ASSERT_EQ(k, oracle::order_by_powering(-2, d)) << d;
    }
  }
  for (std::uint64_t d = 2; d <= 500; ++d) {
    for (std::int64_t a : {2, 5, 7, -3}) {
      if (std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a), d) != 1) continue;
      ASSERT_EQ(ord_mod(a, d), oracle::order_by_powering(a, d)) << a << " mod " << d;
    }
  }
}

TEST(OrdMod, MinusTwoHasOrderAboveTwoAwayFromThree) {
  for (std::uint64_t d = 5; d <= 10'000; d += 2) {
    if (d % 3 == 0) continue;
    ASSERT_GT(ord_mod(-2, d), 2u) << d;
  }
  EXPECT_EQ(ord_mod(-2, 3), 1u);
}

TEST(OrdMod, LargeModulus) {
  const std::uint64_t d = (pow3(40) - 1) / 32;  // odd part of 3^40 - 1
  const auto k = ord_mod(-2, d);
  EXPECT_EQ(pow_mod(d - 2, k, d), 1u);
  EXPECT_EQ(euler_phi(d) % k, 0u);
}

TEST(TwoAdicValuation, Examples) {
  EXPECT_EQ(two_adic_valuation(26), 1);
  EXPECT_EQ(two_adic_valuation(80), 4);
  EXPECT_EQ(two_adic_valuation(7), 0);
}

}  // namespace
}  // namespace theta3
