#include <gtest/gtest.h>

#include <numeric>

#include "sylowkit/cyclic.hpp"
#include "sylowkit/number.hpp"
#include "sylowkit/oracle.hpp"
#include "support.hpp"

using namespace sylowkit;
using fixtures::make;

TEST(Gexpn, Examples) {
  auto const z6 = make("cyclic:6");
  for (elem a = 0; a < 6; ++a) {
    EXPECT_EQ(gexpn(z6, a, 0), z6.unit());
    EXPECT_EQ(gexpn(z6, a, 1), a);
  }
  EXPECT_EQ(gexpn(z6, 2, 3), 0u);
}

TEST(Gexpn, AddsExponents) {
  auto const g = make("symmetric:4");
  for (elem a = 0; a < 24; ++a)
    for (std::uint64_t m = 0; m < 5; ++m)
      for (std::uint64_t n = 0; n < 5; ++n) EXPECT_EQ(gexpn(g, a, m + n), g.mul(gexpn(g, a, m), gexpn(g, a, n)));
}

TEST(Cyclic, Examples) {
  auto const z6 = make("cyclic:6");
  EXPECT_EQ(cyclic(z6, z6.unit()), z6.trivial_set());
  EXPECT_EQ(cyclic(z6, 2), ElemSet::of(6, {0, 2, 4}));
  EXPECT_EQ(cyclic(z6, 1), z6.full_set());
}

TEST(Order, Examples) {
  auto const z6 = make("cyclic:6");
  EXPECT_EQ(order(z6, 0), 1u);
  EXPECT_EQ(order(z6, 2), 3u);
  auto const s4 = make("symmetric:4");
  auto const four_cycle = oracle::first_element_of_order(s4, 4);
  ASSERT_LT(four_cycle, 24u);
  EXPECT_EQ(order(s4, four_cycle), 4u);
  EXPECT_EQ(24 % order(s4, four_cycle), 0u);
}

TEST(Order, AgreesWithOracleAndDividesGroupOrder) {
  for (auto const& ref : fixtures::small_catalog()) {
    auto const g = make(ref);
    for (elem a = 0; a < g.order(); ++a) {
      EXPECT_EQ(order(g, a), oracle::element_order(g, a)) << ref;
      EXPECT_EQ(g.order() % order(g, a), 0u) << ref;
    }
  }
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(0), 0u);
  EXPECT_EQ(phi(1), 1u);
  EXPECT_EQ(phi(9), 6u);
  EXPECT_EQ(phi(8), 4u);
  EXPECT_EQ(phi(12), oracle::phi_by_gcd_count(12));
  EXPECT_EQ(phi(6), phi(2) * phi(3));
  EXPECT_EQ(phi(6), 2u);
}

TEST(Phi, AgreesWithGcdCount) {
  for (std::uint64_t n = 0; n <= 1000; ++n) EXPECT_EQ(phi(n), oracle::phi_by_gcd_count(n)) << n;
}

TEST(Phi, TheoremChecks) {
  auto const vs = phi_theorem_checks(1000);
  ASSERT_EQ(vs.size(), 2u);
  for (auto const& v : vs) EXPECT_TRUE(v.pass) << v.name;
  EXPECT_THROW((void)phi_theorem_checks(1), error);
}

TEST(Phi, CountsGeneratorsOfCyclicGroups) {
  for (std::size_t n = 1; n <= 24; ++n) {
    auto const g = make("cyclic:" + std::to_string(n));
    std::uint64_t gens = 0;
    for (elem a = 0; a < n; ++a) gens += order(g, a) == n;
    EXPECT_EQ(gens, phi(n)) << n;
  }
}

TEST(Dlogn, Examples) {
  EXPECT_EQ(dlogn(2, 24), 3u);
  EXPECT_EQ(dlogn(5, 24), 0u);
  EXPECT_EQ(dlogn(3, 1), 0u);
  EXPECT_THROW((void)dlogn(1, 24), error);
  EXPECT_THROW((void)dlogn(2, 0), error);
}

TEST(Number, PrimesAndPowers) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_TRUE(is_power_of(2, 1));
  EXPECT_TRUE(is_power_of(3, 27));
  EXPECT_FALSE(is_power_of(2, 12));
  EXPECT_EQ(prime_divisors(360), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(expn(2, 10), 1024u);
}
