#include <gtest/gtest.h>

#include "sylowkit/action.hpp"
#include "sylowkit/catalog.hpp"
#include "sylowkit/oracle.hpp"
#include "support.hpp"

using namespace sylowkit;
using fixtures::make;
using fixtures::set;
namespace s3i = fixtures::s3;

namespace {

Action trivial_action(Group const& g, ElemSet const& h, std::size_t points) {
  return make_action(g, h, points, [](elem, elem z) { return z; });
}

// Z3 rotating triples over Z3 that sum to 0. Points are (a, b) with the
// third coordinate -(a+b); rotation sends (a, b, c) to (b, c, a).
Action z3_rotation(Group const& z3) {
  return make_action(z3, z3.full_set(), 9, [&](elem x, elem z) {
    elem a = z / 3, b = z % 3;
    for (elem i = 0; i < x; ++i) {
      elem const c = static_cast<elem>((6 - a - b) % 3);
      a = b;
      b = c;
    }
    return a * 3 + b;
  });
}

}  // namespace

TEST(MakeAction, TrivialIsValid) {
  auto const g = make("symmetric:3");
  auto const a = trivial_action(g, g.full_set(), 4);
  EXPECT_EQ(a.points(), 4u);
  for (elem z = 0; z < 4; ++z) {
    EXPECT_EQ(orbit(a, z), ElemSet::singleton(4, z));
    EXPECT_EQ(stabiliser(a, z), g.full_set());
    EXPECT_TRUE(all_pass(orbit_stabilizer_check(a, z)));
  }
  EXPECT_EQ(fixed_points(a), ElemSet::full(4));
}

TEST(MakeAction, ConstantIsNotBijective) {
  auto const g = make("cyclic:2");
  try {
    (void)make_action(g, g.full_set(), 2, [](elem, elem) { return elem{0}; });
    FAIL();
  } catch (error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotBijective);
  }
}

TEST(MakeAction, NonMorphismWitness) {
  // Z3 acting on 3 points by a fixed transposition for every non-unit.
  auto const g = make("cyclic:3");
  try {
    (void)make_action(g, g.full_set(), 3, [](elem x, elem z) -> elem { return x == 0 ? z : (z == 2 ? 2 : 1 - z); });
    FAIL();
  } catch (error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMorphism);
    EXPECT_EQ(e.witness().size(), 3u);
  }
}

TEST(MakeAction, RowsOutsideHAreFree) {
  // Only H = {0, 2} of Z4 is constrained; the others may do anything.
  auto const g = make("cyclic:4");
  auto const h = set(g, {0, 2});
  auto const a = make_action(g, h, 2, [](elem x, elem z) -> elem { return x % 2 ? 0 : z; });
  EXPECT_EQ(fixed_points(a), ElemSet::full(2));
}

TEST(Orbit, ConjugationOnS3) {
  auto const s3 = make("symmetric:3");
  auto const a = conjugation_action(s3, s3.full_set());
  EXPECT_EQ(orbit(a, s3i::t01), set(s3, {s3i::t12, s3i::t01, s3i::t02}));
  EXPECT_EQ(stabiliser(a, s3i::t01), set(s3, {s3i::e, s3i::t01}));
  auto const vs = orbit_stabilizer_check(a, s3i::t01);
  EXPECT_TRUE(all_pass(vs));
  EXPECT_EQ(std::get<std::int64_t>(vs[0].lhs), 3);
}

TEST(Orbit, TrivialGroupGivesSingletons) {
  auto const g = make("symmetric:4");
  auto const a = conjugation_action(g, g.trivial_set());
  for (elem z = 0; z < 24; ++z) EXPECT_EQ(card(orbit(a, z)), 1u);
}

TEST(Orbit, ThreeCycleInS4) {
  auto const g = make("symmetric:4");
  auto const a = conjugation_action(g, g.full_set());
  elem three_cycle = 0;
  while (oracle::element_order(g, three_cycle) != 3) ++three_cycle;
  EXPECT_EQ(card(orbit(a, three_cycle)), 8u);
  EXPECT_EQ(card(stabiliser(a, three_cycle)), 3u);
}

TEST(Stabiliser, RegularTranslationIsTrivial) {
  auto const g = make("dihedral:4");
  auto const a = left_translation_action(g, g.full_set(), g.trivial_set(), g.full_set());
  EXPECT_EQ(a.points(), 8u);
  for (elem z = 0; z < 8; ++z) EXPECT_EQ(stabiliser(a, z), g.trivial_set());
}

TEST(FixedPoints, Z3RotationOfZeroSumTriples) {
  auto const z3 = make("cyclic:3");
  auto const a = z3_rotation(z3);
  EXPECT_EQ(fixed_points(a), ElemSet::of(9, {0, 4, 8}));  // (0,0,0), (1,1,1), (2,2,2)
  auto const v = mpl_check(a, 3);
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(std::get<std::int64_t>(v.lhs), 0);
}

TEST(Mpl, TranspositionOnItsCosetsInS3) {
  auto const s3 = make("symmetric:3");
  auto const h = set(s3, {s3i::e, s3i::t01});
  auto const a = left_translation_action(s3, h, h, s3.full_set());
  EXPECT_EQ(a.points(), 3u);
  EXPECT_EQ(card(fixed_points(a)), 1u);
  EXPECT_EQ(fixed_points(a).first(), 0u);  // the coset of H itself
  EXPECT_TRUE(mpl_check(a, 2).pass);
}

TEST(Mpl, Preconditions) {
  auto const s3 = make("symmetric:3");
  auto const a = conjugation_action(s3, s3.full_set());
  EXPECT_THROW((void)mpl_check(a, 4), error);
  EXPECT_THROW((void)mpl_check(a, 2), error);  // |S3| = 6
  EXPECT_TRUE(mpl_check(conjugation_action(s3, s3.trivial_set()), 2).pass);
}

TEST(LeftTranslation, ByHalfTurnOnCosetsOfZ12) {
  auto const z12 = make("cyclic:12");
  auto const a = left_translation_action(z12, set(z12, {0, 6}), set(z12, {0, 4, 8}), z12.full_set());
  EXPECT_EQ(a.points(), 4u);
  EXPECT_EQ(a.labels(), (std::vector<elem>{0, 1, 2, 3}));
  for (elem z = 0; z < 4; ++z) EXPECT_EQ(a.labels()[a.to(6, z)], (a.labels()[z] + 6) % 4);
  EXPECT_TRUE(fixed_points(a).is_empty());
}

TEST(LeftTranslation, TrivialActingGroupIsIdentity) {
  auto const g = make("symmetric:4");
  auto const l = closure(g, {1, 2});
  auto const a = left_translation_action(g, g.trivial_set(), l, g.full_set());
  EXPECT_EQ(a.points(), lindex(g, l, g.full_set()));
  EXPECT_EQ(fixed_points(a), ElemSet::full(a.points()));
}

TEST(LeftTranslation, FixedCosetsLieInTheNormaliser) {
  for (auto const& ref : fixtures::small_catalog()) {
    auto const g = make(ref);
    for (auto const& h : generated_subgroup_sample(g, g.full_set())) {
      auto const a = left_translation_action(g, h, h, g.full_set());
      auto const n = normaliser(g, h, g.full_set());
      ElemSet fixed_roots(g.order());
      fixed_points(a).for_each([&](elem z) { fixed_roots.insert(a.labels()[z]); });
      EXPECT_EQ(fixed_roots, lcoset_roots(g, h, n)) << ref;
    }
  }
}

TEST(SubsetConjugation, Examples) {
  auto const s3 = make("symmetric:3");
  std::vector<ElemSet> order2{set(s3, {0, s3i::t12}), set(s3, {0, s3i::t01}), set(s3, {0, s3i::t02})};
  auto const a = conjugation_action_on_subsets(s3, s3.full_set(), order2);
  EXPECT_EQ(orbit(a, 0), ElemSet::full(3));

  auto const a3 = set(s3, {0, s3i::c3a, s3i::c3b});
  auto const b = conjugation_action_on_subsets(s3, s3.full_set(), {a3});
  EXPECT_EQ(fixed_points(b), ElemSet::full(1));

  EXPECT_THROW((void)conjugation_action_on_subsets(s3, s3.full_set(), {order2[0]}), error);

  auto const s4 = make("symmetric:4");
  std::vector<ElemSet> fam;
  for (auto const& m : oracle::sylow_subgroups(s4, 3)) fam.push_back(ElemSet::of(24, std::span<elem const>(m)));
  auto const c = conjugation_action_on_subsets(s4, s4.full_set(), fam);
  EXPECT_EQ(orbit_partition(c).size(), 1u);
  EXPECT_EQ(card(orbit(c, 0)), 4u);
}

TEST(OrbitStabilizer, EveryPointOfEverySampleAction) {
  for (auto const& ref : fixtures::small_catalog()) {
    auto const g = make(ref);
    auto const sample = generated_subgroup_sample(g, g.full_set());
    for (auto const& h : sample) {
      auto const conj = conjugation_action(g, h);
      for (elem z = 0; z < conj.points(); ++z) ASSERT_TRUE(all_pass(orbit_stabilizer_check(conj, z))) << ref;
      if (is_power_of(prime_divisors(std::max<std::size_t>(card(h), 2)).front(), card(h)))
        EXPECT_TRUE(mpl_check(conj, prime_divisors(std::max<std::size_t>(card(h), 2)).front()).pass) << ref;
    }
  }
}
