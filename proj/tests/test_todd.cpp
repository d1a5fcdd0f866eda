#include <gtest/gtest.h>

#include "elw/error.hpp"
#include "elw/todd.hpp"

using namespace elw;

namespace {

// Independent evaluation: walk every integer p <= n+1, test primality by
// hand, multiply p^floor(n/(p-1)).
Integer mu_td_direct(unsigned n) {
  Integer result = 1;
  for (unsigned p = 2; p <= n + 1; ++p) {
    bool prime = true;
    for (unsigned d = 2; d * d <= p; ++d) prime = prime && (p % d != 0);
    if (!prime) continue;
    for (unsigned k = 0; k < n / (p - 1); ++k) result *= p;
  }
  return result;
}

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST(Todd, PublishedValues) {
  EXPECT_EQ(todd::mu_td(1), 2);
  EXPECT_EQ(todd::mu_td(2), 12);
  EXPECT_EQ(todd::mu_td(3), 24);
  EXPECT_EQ(todd::mu_td(4), 720);
}

TEST(Todd, EdgeValues) {
  EXPECT_EQ(todd::mu_td(0), 1);
  EXPECT_EQ(todd::mu_td(5), 1440);
  EXPECT_EQ(todd::mu_td(5), 32 * 9 * 5);
}

TEST(Todd, Valuation) {
  EXPECT_EQ(todd::mu_td_valuation(4, 2), 4u);
  EXPECT_EQ(todd::mu_td_valuation(4, 7), 0u);
  EXPECT_EQ(todd::mu_td_valuation(2, 3), 1u);
  EXPECT_THROW(todd::mu_td_valuation(4, 4), Error);
}

TEST(Todd, FactorRoundTrip) {
  const auto td = todd::factor(4);
  EXPECT_EQ(td.str(), "2^4 3^2 5^1");
  EXPECT_EQ(td.expand(), 720);
  EXPECT_EQ(todd::factor(0).str(), "");
  for (const auto& [p, e] : todd::factor(30).valuations) {
    EXPECT_GT(e, 0u);
    EXPECT_LE(p, 31u);
  }
}

TEST(Todd, ChainExamples) {
  EXPECT_TRUE(todd::check_divides_chain(2, 2).holds);
  EXPECT_TRUE(todd::check_divides_chain(4, 3).holds);
  EXPECT_TRUE(divides(factorial(4) * todd::mu_td(3), todd::mu_td(6)));
  for (unsigned m = 1; m <= 30; ++m) EXPECT_TRUE(todd::check_divides_chain(1, m).holds);
  EXPECT_THROW(todd::check_divides_chain(0, 3), Error);
}

TEST(ToddProperty, ProductMatchesValuations) {
  for (unsigned n = 0; n <= 50; ++n) {
    const Integer direct = mu_td_direct(n);
    ASSERT_EQ(todd::mu_td(n), direct) << n;
    ASSERT_EQ(todd::factor(n).expand(), direct) << n;
    Integer rebuilt = 1;
    for (unsigned p = 2; p <= n + 1; ++p) {
      if (!is_prime(p)) continue;
      for (std::uint64_t k = 0; k < todd::mu_td_valuation(n, p); ++k) rebuilt *= p;
    }
    ASSERT_EQ(rebuilt, direct) << n;
  }
}

TEST(ToddProperty, MonotoneDivisibility) {
  for (unsigned n = 0; n <= 20; ++n) {
    for (unsigned m = n; m <= 20; ++m) {
      ASSERT_TRUE(divides(todd::mu_td(n), todd::mu_td(m))) << n << " " << m;
    }
  }
}

TEST(ToddProperty, FactorialDividesMuTd) {
  for (unsigned n = 0; n <= 20; ++n) {
    for (unsigned p = 2; p <= n + 1; ++p) {
      if (!is_prime(p)) continue;
      ASSERT_LE(factorial_valuation(n, p), n / (p - 1));
    }
    ASSERT_TRUE(divides(factorial(n), todd::mu_td(n))) << n;
  }
}

// Valuation route against expanded integers.
TEST(ToddProperty, ChainExhaustive) {
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned m = 1; m <= 12; ++m) {
      const auto result = todd::check_divides_chain(n, m);
      ASSERT_TRUE(result.holds) << n << " " << m;
      ASSERT_TRUE(divides(factorial(n) * todd::mu_td(m), todd::mu_td(n + m - 1))) << n << " " << m;
    }
  }
}

TEST(ToddProperty, ChainScalesToLargeArguments) {
  EXPECT_TRUE(todd::check_divides_chain(1500, 2000).holds);
}
