#include <gtest/gtest.h>

#include <cstdlib>

#include "sylowkit/oracle.hpp"
#include "sylowkit/sylow.hpp"
#include "support.hpp"

using namespace sylowkit;
using fixtures::make;
using fixtures::set;
namespace s3i = fixtures::s3;

TEST(TupleCarrier, StarTuplesMultiplyToUnit) {
  auto const g = make("symmetric:3");
  TupleCarrier tc(g, g.full_set(), 3);
  auto const size = tc.power_size(2, 1'000'000);
  ASSERT_TRUE(size.has_value());
  EXPECT_EQ(*size, 36u);
  for (std::size_t i = 0; i < *size; ++i) {
    auto const t = tc.star_tuple(i);
    ASSERT_EQ(t.size(), 3u);
    EXPECT_TRUE(tc.in_star(t));
    EXPECT_EQ(g.mul(t[0], t[1], t[2]), g.unit());
    EXPECT_EQ(tc.star_index(t), i);
  }
}

TEST(TupleCarrier, PowerTuplesAndCap) {
  auto const g = make("cyclic:4");
  TupleCarrier tc(g, ElemSet::of(4, {0, 2}), 2);
  auto const size = tc.power_size(2, 100);
  ASSERT_TRUE(size.has_value());
  EXPECT_EQ(*size, 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(tc.in_power(tc.power_tuple(i)));
  std::vector<elem> outside{1, 0};
  EXPECT_FALSE(tc.in_power(outside));
  EXPECT_FALSE(tc.power_size(30, 1000).has_value());
}

TEST(TupleCarrier, RotationMapsStarToStar) {
  // If h0 h1 ... h_{p-1} = 1 then h1 ... h_{p-1} h0 = 1.
  auto const g = make("dihedral:5");
  TupleCarrier tc(g, g.full_set(), 5);
  auto const size = *tc.power_size(4, 1'000'000);
  for (std::size_t i = 0; i < size; i += 7) {
    auto t = tc.star_tuple(i);
    std::rotate(t.begin(), t.begin() + 1, t.end());
    EXPECT_TRUE(tc.in_star(t));
  }
}

TEST(Cauchy, Examples) {
  auto const z6 = make("cyclic:6");
  EXPECT_EQ(cauchy(z6, z6.full_set(), 3), 2u);
  auto const s3 = make("symmetric:3");
  auto const t = cauchy(s3, s3.full_set(), 2);
  EXPECT_EQ(oracle::element_order(s3, t), 2u);
  EXPECT_EQ(t, s3i::t12);
  auto const z2 = make("cyclic:2");
  EXPECT_EQ(cauchy(z2, z2.full_set(), 2), 1u);
}

TEST(Cauchy, TraceRecordsFixedTuples) {
  auto const z6 = make("cyclic:6");
  auto const r = cauchy_with_trace(z6, z6.full_set(), 3);
  EXPECT_TRUE(r.constructive);
  EXPECT_EQ(r.tuple_carrier, 36u);
  EXPECT_EQ(r.fixed_points, 3u);
  EXPECT_FALSE(r.trace.empty());
}

TEST(Cauchy, Errors) {
  auto const z6 = make("cyclic:6");
  EXPECT_THROW((void)cauchy(z6, z6.full_set(), 5), error);
  EXPECT_THROW((void)cauchy(z6, z6.full_set(), 4), error);
  EXPECT_THROW((void)cauchy(z6, ElemSet::of(6, {0, 1}), 2), error);
}

TEST(Cauchy, FallbackAgreesWithConstruction) {
  for (auto const& ref : fixtures::small_catalog()) {
    auto const g = make(ref);
    for (auto p : prime_divisors(g.order())) {
      auto const built = cauchy_with_trace(g, g.full_set(), p, 1'000'000);
      auto const fallback = cauchy_with_trace(g, g.full_set(), p, 0);
      EXPECT_FALSE(fallback.constructive);
      EXPECT_EQ(built.element, fallback.element) << ref << " p=" << p;
      EXPECT_EQ(oracle::element_order(g, built.element), p);
    }
  }
}

TEST(Cauchy, CapFromEnvironment) {
  ::setenv("GRP_MAX_TUPLE_CARRIER", "10", 1);
  EXPECT_EQ(max_tuple_carrier_from_env(), 10u);
  auto const z6 = make("cyclic:6");
  EXPECT_FALSE(cauchy_with_trace(z6, z6.full_set(), 3).constructive);
  ::unsetenv("GRP_MAX_TUPLE_CARRIER");
  EXPECT_EQ(max_tuple_carrier_from_env(), default_max_tuple_carrier);
}

TEST(IsSylow, Examples) {
  auto const q8 = make("q8");
  EXPECT_TRUE(is_sylow(q8, q8.full_set(), 2, q8.full_set()));
  auto const s4 = make("symmetric:4");
  auto const h = sylow1(s4, s4.full_set(), 2).subgroup;
  EXPECT_TRUE(is_sylow(s4, s4.full_set(), 2, h));
  auto const four = oracle::closed_subsets_of_size(s4, 4);
  ASSERT_FALSE(four.empty());
  EXPECT_FALSE(is_sylow(s4, s4.full_set(), 2, ElemSet::of(24, std::span<elem const>(four.front()))));
}

TEST(Sylow1Rec, Z12) {
  auto const z12 = make("cyclic:12");
  auto const h = sylow1_rec(z12, z12.full_set(), 2, set(z12, {0, 6}), 1);
  EXPECT_EQ(h, set(z12, {0, 3, 6, 9}));
  EXPECT_EQ(h.members(), oracle::generate(z12, {3}));
}

TEST(Sylow1Rec, S4Steps) {
  auto const s4 = make("symmetric:4");
  auto const k = s4.full_set();
  for (auto const& two : oracle::closed_subsets_of_size(s4, 2)) {
    auto const h1 = ElemSet::of(24, std::span<elem const>(two));
    auto const h2 = sylow1_rec(s4, k, 2, h1, 1);
    EXPECT_EQ(card(h2), 4u);
    EXPECT_TRUE(subset(h1, h2));
    EXPECT_TRUE(is_normal(s4, h1, h2));
    auto const h3 = sylow1_rec(s4, k, 2, h2, 2);
    EXPECT_EQ(card(h3), 8u);
    EXPECT_TRUE(is_sylow(s4, k, 2, h3));
  }
  EXPECT_THROW((void)sylow1_rec(s4, k, 2, k, 3), error);
}

TEST(Sylow1, Examples) {
  auto const z12 = make("cyclic:12");
  EXPECT_EQ(sylow1(z12, z12.full_set(), 2).subgroup, set(z12, {0, 3, 6, 9}));
  auto const s4 = make("symmetric:4");
  EXPECT_EQ(card(sylow1(s4, s4.full_set(), 2).subgroup), 8u);
  EXPECT_EQ(card(sylow1(s4, s4.full_set(), 3).subgroup), 3u);
  auto const d4 = make("dihedral:4");
  EXPECT_EQ(sylow1(d4, d4.full_set(), 2).subgroup, d4.full_set());
  EXPECT_THROW((void)sylow1(s4, s4.full_set(), 5), error);
}

TEST(Sylow1, ChainAcrossCatalog) {
  for (auto const& ref : fixtures::small_catalog()) {
    auto const g = make(ref);
    for (auto p : prime_divisors(g.order())) {
      auto const cert = sylow1(g, g.full_set(), p);
      ASSERT_EQ(cert.chain.size(), cert.n) << ref;
      for (std::size_t i = 0; i + 1 < cert.chain.size(); ++i) {
        EXPECT_EQ(card(cert.chain[i + 1]), p * card(cert.chain[i]));
        EXPECT_TRUE(is_normal(g, cert.chain[i], cert.chain[i + 1]));
      }
      EXPECT_EQ(card(cert.subgroup), expn(p, dlogn(p, g.order())));
    }
  }
}

TEST(Sylow1, InsideAProperSubgroup) {
  auto const s4 = make("symmetric:4");
  auto const k = sylow1(s4, s4.full_set(), 2).subgroup;  // D4 inside S4
  auto const h = sylow1(s4, k, 2).subgroup;
  EXPECT_EQ(h, k);
}

TEST(Sylow2, Examples) {
  auto const s3 = make("symmetric:3");
  auto const h = set(s3, {s3i::e, s3i::t01});
  auto const l = set(s3, {s3i::e, s3i::t02});
  auto const x = sylow2(s3, s3.full_set(), 2, h, l);
  EXPECT_EQ(conjsg(s3, l, x), h);
  EXPECT_EQ(sylow2(s3, s3.full_set(), 2, h, h), s3.unit());

  auto const s4 = make("symmetric:4");
  auto const sy = oracle::sylow_subgroups(s4, 2);
  ASSERT_EQ(sy.size(), 3u);
  auto const a = ElemSet::of(24, std::span<elem const>(sy[0]));
  auto const b = ElemSet::of(24, std::span<elem const>(sy[2]));
  auto const y = sylow2(s4, s4.full_set(), 2, a, b);
  EXPECT_EQ(conjsg(s4, b, y), a);
}

TEST(Sylow2, PSubgroupLandsInAConjugate) {
  auto const s4 = make("symmetric:4");
  auto const l = sylow1(s4, s4.full_set(), 2).subgroup;
  for (auto const& m : oracle::p_subgroups(s4, 2)) {
    auto const h = ElemSet::of(24, std::span<elem const>(m));
    auto const x = sylow2(s4, s4.full_set(), 2, h, l);
    EXPECT_TRUE(subset(h, conjsg(s4, l, x)));
  }
}

TEST(Syset, Counts) {
  auto const s4 = make("symmetric:4");
  EXPECT_EQ(syset(s4, s4.full_set(), 2).size(), 3u);
  EXPECT_EQ(syset(s4, s4.full_set(), 3).size(), 4u);
  auto const s3 = make("symmetric:3");
  EXPECT_EQ(syset(s3, s3.full_set(), 2).size(), 3u);
  EXPECT_EQ(syset(s3, s3.full_set(), 3).size(), 1u);
}

TEST(Syset, SortedAndMatchesOracle) {
  for (auto const& ref : fixtures::small_catalog()) {
    auto const g = make(ref);
    for (auto p : prime_divisors(g.order())) {
      auto const sy = syset(g, g.full_set(), p);
      EXPECT_TRUE(std::is_sorted(sy.begin(), sy.end()));
      std::vector<oracle::Members> got;
      for (auto const& s : sy) got.push_back(s.members());
      EXPECT_EQ(got, oracle::sylow_subgroups(g, p)) << ref << " p=" << p;
      if (g.is_abelian()) EXPECT_EQ(sy.size(), 1u);
    }
  }
}

TEST(Sylow3, ChecksPassOnCatalog) {
  for (auto const& ref : fixtures::small_catalog()) {
    auto const g = make(ref);
    for (auto p : prime_divisors(g.order())) {
      for (auto const& v : sylow3_div_check(g, g.full_set(), p)) EXPECT_TRUE(v.pass) << ref << " " << v.name;
      for (auto const& v : sylow3_mod_check(g, g.full_set(), p)) EXPECT_TRUE(v.pass) << ref << " " << v.name;
    }
  }
}

TEST(Sylow3, PinnedValues) {
  auto const s4 = make("symmetric:4");
  auto const div = sylow3_div_check(s4, s4.full_set(), 3);
  EXPECT_TRUE(all_pass(div));
  EXPECT_EQ(std::get<std::int64_t>(div[0].rhs), 4);
  auto const mod = sylow3_mod_check(s4, s4.full_set(), 2);
  EXPECT_TRUE(all_pass(mod));
}
