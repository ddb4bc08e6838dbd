#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <thread>

#include "dsing/polynomial.hpp"
#include "test_oracles.hpp"

using namespace dsing;
using dsing::testing::ints;

TEST(Polynomial, RingExamples) {
  const auto p = ints({0, 1, 0, 1});
  EXPECT_EQ(p + IntPolynomial{}, p);
  EXPECT_EQ(ints({1, 1}) * ints({1, -1}), ints({1, 0, -1}));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(add(p, p), ints({0, 2, 0, 2}));
  EXPECT_EQ(subtract(ints({1}), p), ints({1, -1, 0, -1}));
  EXPECT_EQ(multiply(p, IntPolynomial{}), IntPolynomial{});
}

TEST(Polynomial, ZeroHasNoDegree) {
  IntPolynomial zero;
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.degree(), IntPolynomial::kZeroDegree);
  EXPECT_LT(zero.degree(), ints({7}).degree());
  EXPECT_EQ(ints({0, 0, 0}), zero);  // trailing zeros are trimmed
  EXPECT_EQ(ints({1, 2, 0}).degree(), 1);
}

TEST(Polynomial, Rendering) {
  EXPECT_EQ(to_string(ints({2, 1, 1})), "2 + x + x^2");
  EXPECT_EQ(to_string(ints({1, 0, -1})), "1 - x^2");
  EXPECT_EQ(to_string(ints({0, -3, 0, 4})), "-3x + 4x^3");
  EXPECT_EQ(to_string(IntPolynomial{}), "0");
  EXPECT_EQ(to_string(ints({-1})), "-1");
}

TEST(Polynomial, BigCoefficientsStayExact) {
  IntPolynomial p = ints({1, 1});
  for (int i = 0; i < 7; ++i) p = p * p;  // (1 + x)^128
  EXPECT_EQ(p.degree(), 128);
  // C(128, 64) = 2395687031702525847606...; check against a direct product
  BigInt binom(1);
  for (int k = 1; k <= 64; ++k) binom = binom * (64 + k) / k;
  EXPECT_EQ(p.coeff(64), binom);
  EXPECT_GT(p.coeff(64), BigInt(std::numeric_limits<std::int64_t>::max()));
}

TEST(ReduceModXnMinus1, Examples) {
  EXPECT_EQ(reduce_mod_xn_minus_1(IntPolynomial::monomial(6), 5), ints({0, 1}));
  EXPECT_EQ(reduce_mod_xn_minus_1(ints({1, 2, 2, 2, 2, 0, 1}), 5), ints({1, 3, 2, 2, 2}));
  EXPECT_EQ(reduce_mod_xn_minus_1(ints({1, 0, 1}), 4), ints({1, 0, 1}));
  EXPECT_THROW(reduce_mod_xn_minus_1(ints({1}), 0), PreconditionError);
}

TEST(ReduceModXnMinus1, DifferenceIsMultipleOfModulus) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-9, 9), len(1, 30), mod(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigInt> c(static_cast<std::size_t>(len(rng)));
    for (auto& x : c) x = coeff(rng);
    const IntPolynomial p(std::move(c));
    const auto n = static_cast<std::size_t>(mod(rng));
    const auto r = reduce_mod_xn_minus_1(p, n);
    ASSERT_LT(r.degree(), static_cast<int>(n));
    ASSERT_TRUE(divides(IntPolynomial::x_pow_minus_one(n), p - r));
  }
}

TEST(Cyclotomic, SmallIndices) {
  EXPECT_EQ(cyclotomic(1), ints({-1, 1}));
  EXPECT_EQ(cyclotomic(2), ints({1, 1}));
  EXPECT_EQ(cyclotomic(4), ints({1, 0, 1}));
  // x^6 - 1 = (x - 1)(x + 1)(x^2 + x + 1)(x^2 - x + 1)
  EXPECT_EQ(cyclotomic(6), ints({1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), ints({1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, FirstNonUnitCoefficientAt105) {
  // Phi_105 is the smallest cyclotomic with a coefficient outside {-1, 0, 1}: -2 at x^7 and x^41.
  const auto& p = cyclotomic(105);
  EXPECT_EQ(p.degree(), 48);
  EXPECT_EQ(p.coeff(7), BigInt(-2));
  EXPECT_EQ(p.coeff(41), BigInt(-2));
  for (unsigned d = 1; d < 105; ++d)
    for (const auto& c : cyclotomic(d).coefficients()) ASSERT_LE(abs(c), BigInt(1)) << d;
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinus1) {
  for (unsigned n = 1; n <= 120; ++n) {
    IntPolynomial prod = IntPolynomial::constant(BigInt(1));
    for (unsigned d : divisors(n)) prod = prod * cyclotomic(d);
    ASSERT_EQ(prod, IntPolynomial::x_pow_minus_one(n)) << n;
  }
}

TEST(Cyclotomic, MonicOfTotientDegree) {
  for (unsigned d = 1; d <= 150; ++d) {
    const auto& p = cyclotomic(d);
    ASSERT_TRUE(p.is_monic()) << d;
    ASSERT_EQ(p.degree(), static_cast<int>(euler_totient(d))) << d;
  }
}

TEST(Cyclotomic, PrimeIndexIsAllOnes) {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 31u, 97u}) {
    const IntPolynomial expected(std::vector<BigInt>(p, BigInt(1)));
    EXPECT_EQ(cyclotomic(p), expected) << p;
  }
}

TEST(Cyclotomic, ConcurrentFirstUse) {
  // d values not touched by earlier tests in this binary
  std::vector<std::jthread> threads;
  std::vector<IntPolynomial> seen(8);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([t, &seen] {
      for (unsigned d = 300; d < 340; ++d) cyclotomic(d);
      seen[static_cast<std::size_t>(t)] = cyclotomic(330);
    });
  threads.clear();
  for (const auto& p : seen) EXPECT_EQ(p, seen.front());
  EXPECT_EQ(seen.front().degree(), static_cast<int>(euler_totient(330)));
}

TEST(Divides, Examples) {
  const auto phi4 = ints({1, 0, 1});
  EXPECT_TRUE(divides(phi4, ints({0, 1, 0, 1})));
  EXPECT_FALSE(divides(phi4, ints({0, 1, 1, 1})));
  const auto res = long_divide(ints({0, 1, 1, 1}), phi4);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->remainder, ints({-1}));
  EXPECT_EQ(res->quotient, ints({1, 1}));
  EXPECT_TRUE(divides(ints({-1, 1}), IntPolynomial{}));
  EXPECT_THROW(divides(IntPolynomial{}, ints({1})), InvalidDivisor);
}

TEST(Divides, NonMonicOverIntegers) {
  EXPECT_EQ(exact_quotient(ints({2, 2}), ints({2, 4, 2})), ints({1, 1}));
  EXPECT_FALSE(divides(ints({2, 2}), ints({1, 1})));  // quotient 1/2 is not integral
  EXPECT_TRUE(divides(ints({3}), ints({3, -6, 9})));
}

TEST(Divides, WitnessQuotientProperty) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coeff(-5, 5), deg(0, 8);
  auto random_poly = [&](int degree, bool monic) {
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = coeff(rng);
    if (monic) c.back() = 1;
    else if (c.back() == 0) c.back() = 1;
    return IntPolynomial(std::move(c));
  };
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(deg(rng) + 1, true);
    const auto s = random_poly(deg(rng), false);
    const auto q = exact_quotient(p, p * s);
    ASSERT_TRUE(q);
    ASSERT_EQ(*q * p, p * s);
    // a nonzero remainder of lower degree breaks divisibility
    const auto r = random_poly(std::max(0, p.degree() - 1), false);
    ASSERT_FALSE(divides(p, p * s + r));
  }
}

TEST(NumberTheory, Divisors) {
  EXPECT_EQ(divisors(1), (std::vector<unsigned>{1}));
  EXPECT_EQ(divisors(6), (std::vector<unsigned>{1, 2, 3, 6}));
  EXPECT_EQ(divisors(36), (std::vector<unsigned>{1, 2, 3, 4, 6, 9, 12, 18, 36}));
  EXPECT_EQ(divisors(97), (std::vector<unsigned>{1, 97}));
}

TEST(NumberTheory, TotientMatchesCoprimeCount) {
  for (unsigned d = 1; d <= 500; ++d) {
    unsigned count = 0;
    for (unsigned k = 1; k <= d; ++k) count += std::gcd(k, d) == 1;
    ASSERT_EQ(euler_totient(d), count) << d;
  }
  EXPECT_EQ(euler_totient(4), 2u);
}

TEST(NumberTheory, TotientSumOverDivisors) {
  for (unsigned n = 1; n <= 300; ++n) {
    unsigned sum = 0;
    for (unsigned d : divisors(n)) sum += euler_totient(d);
    ASSERT_EQ(sum, n);
  }
}

TEST(NumberTheory, Primality) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(9));
}

TEST(UnitRoots, Examples) {
  const auto at4 = evaluate_at_unit_roots(ints({0, 1, 0, 1}), 4);
  EXPECT_NEAR(std::abs(at4[1]), 0.0, 1e-12);
  const auto at5 = evaluate_at_unit_roots(ints({0, 1, 0, 0, 1}), 5);
  EXPECT_NEAR(at5[0].real(), 2.0, 1e-12);
  EXPECT_NEAR(at5[0].imag(), 0.0, 1e-12);
  const auto at3 = evaluate_at_unit_roots(ints({1, 1, 1}), 3);
  EXPECT_NEAR(std::abs(at3[1]), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(at3[2]), 0.0, 1e-12);
}

TEST(UnitRoots, CycleSpectrum) {
  for (int n = 3; n <= 20; ++n) {
    IntPolynomial psi = IntPolynomial::monomial(1) + IntPolynomial::monomial(static_cast<std::size_t>(n - 1));
    const auto values = evaluate_at_unit_roots(psi, static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      EXPECT_NEAR(values[static_cast<std::size_t>(j)].real(), 2.0 * std::cos(2.0 * M_PI * j / n), 1e-9);
      EXPECT_NEAR(values[static_cast<std::size_t>(j)].imag(), 0.0, 1e-9);
    }
  }
}
