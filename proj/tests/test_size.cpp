#include <gtest/gtest.h>

#include "coarse/enumerate.hpp"
#include "coarse/size.hpp"

using namespace coarse;

namespace {

struct TwoClasses : ::testing::Test {
  GroundPtr g = make_ground(3);
  CoarseSpace c = from_partition(g, {{0, 1}, {2}});
  PointSet set(std::initializer_list<Index> m) const { return PointSet(g, m); }
};

}  // namespace

TEST_F(TwoClasses, Large) {
  EXPECT_TRUE(is_large(c, PointSet::all(g)));
  EXPECT_TRUE(is_large(c, set({0, 2})));
  EXPECT_FALSE(is_large(c, set({0, 1})));
  EXPECT_FALSE(is_large(c, set({})));
}

TEST_F(TwoClasses, Thick) {
  EXPECT_TRUE(is_thick(c, PointSet::all(g)));
  EXPECT_TRUE(is_thick(c, set({0, 2})));
  EXPECT_FALSE(is_thick(c, set({0})));
  EXPECT_FALSE(is_thick(c, set({})));
}

TEST_F(TwoClasses, PiecewiseLargeSmallExtralarge) {
  EXPECT_FALSE(is_piecewise_large(c, set({})));
  EXPECT_TRUE(is_piecewise_large(c, set({0})));
  EXPECT_TRUE(is_small(c, set({})));
  EXPECT_FALSE(is_small(c, set({0})));
  EXPECT_FALSE(is_small(c, PointSet::all(g)));
  EXPECT_TRUE(is_extralarge(c, PointSet::all(g)));
  EXPECT_FALSE(is_extralarge(c, set({1, 2})));
}

TEST(Thin, Examples) {
  const auto g = make_ground(4);
  const CoarseSpace c = from_partition(g, {{0, 1}, {2, 3}});
  EXPECT_TRUE(is_thin(c, PointSet(g, {0, 2})));
  EXPECT_FALSE(is_thin(c, PointSet::all(g)));
  const SizeReport r = classify(c, PointSet(g, {0, 1, 2}));
  EXPECT_TRUE(r.flags.thin);
  ASSERT_TRUE(r.witnesses.thin_excision);
  EXPECT_EQ(r.witnesses.thin_excision->members(), (std::vector<Index>{0, 1}));
  const SizeReport bad = classify(c, PointSet::all(g));
  ASSERT_TRUE(bad.witnesses.thin_violation);
  EXPECT_EQ(*bad.witnesses.thin_violation, (std::pair<Index, Index>{2, 3}));
  EXPECT_TRUE(classify(c, PointSet(g, {0, 2})).witnesses.thin_excision->empty());
}

TEST(Classify, ConnectedWholeSpace) {
  const auto g = make_ground(3);
  const CoarseSpace c = generate(g, {full(g)});
  const SizeFlags f = classify(c, PointSet::all(g)).flags;
  EXPECT_TRUE(f.large && f.thick && f.piecewise_large && f.extralarge && f.thin);
  EXPECT_FALSE(f.small || f.slim || f.meshy || f.slim_interior);
}

TEST(Classify, WitnessesAreLeastIndex) {
  const auto g = make_ground(5);
  const CoarseSpace c = from_partition(g, {{0, 3}, {1}, {2, 4}});
  const SizeReport r = classify(c, PointSet(g, {1, 2, 4}));
  EXPECT_EQ(r.witnesses.thick_class->members(), (std::vector<Index>{1}));
  EXPECT_EQ(r.witnesses.missed_class->members(), (std::vector<Index>{0, 3}));
  EXPECT_EQ(r.witnesses.core_missed_class->members(), (std::vector<Index>{0, 3}));
  EXPECT_EQ(r.witnesses.swallowed_class->members(), (std::vector<Index>{1}));
}

TEST(Classify, DiscreteSingleton) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto g = make_ground(n);
    EXPECT_EQ(is_large(generate(g, {}), PointSet(g, {0})), n == 1);
  }
}

TEST(Classify, FlagInvariants) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& c : all_coarse_spaces(n))
      for (const auto& a : all_subsets(c.ground())) {
        const SizeFlags f = classify(c, a).flags;
        ASSERT_EQ(f.slim, !f.large);
        ASSERT_EQ(f.meshy, !f.thick);
        ASSERT_EQ(f.slim_interior, !f.extralarge);
        if (n == 0) continue;
        if (f.thick) { ASSERT_TRUE(f.piecewise_large); }
        if (f.extralarge) { ASSERT_TRUE(f.large); }
        if (f.large) { ASSERT_TRUE(f.piecewise_large); }
        if (f.small) { ASSERT_FALSE(f.piecewise_large); }
        // Finite reductions: piecewise large iff nonempty, extralarge iff A = X, small iff empty.
        ASSERT_EQ(f.piecewise_large, !a.empty());
        ASSERT_EQ(f.extralarge, a.size() == n);
        ASSERT_EQ(f.small, a.empty());
      }
}

TEST(Oracle, AgreesWithClassifierExhaustively) {
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& c : all_coarse_spaces(n)) {
      const SizeOracle oracle(c);
      for (const auto& a : all_subsets(c.ground())) {
        ASSERT_EQ(classify(c, a).flags, oracle.flags(a)) << "n=" << n << " A=" << a.size();
        ++checked;
      }
    }
  EXPECT_EQ(checked, 1u + 2u + 2u * 4u + 5u * 8u + 15u * 16u);
}

TEST(Oracle, CapacityGuard) {
  const auto g = make_ground(5);
  EXPECT_THROW(SizeOracle{generate(g, {full(g)})}, CapacityError);
  const auto big = make_ground(9);
  EXPECT_THROW(SizeOracle{generate(big, {})}, CapacityError);
  // Five points, two classes of sizes 3 and 2: 13 pairs, accepted.
  const CoarseSpace ok = from_partition(g, {{0, 1, 2}, {3, 4}});
  EXPECT_NO_THROW(SizeOracle{ok});
}

TEST(Oracle, Examples) {
  const auto g = make_ground(3);
  const CoarseSpace bounded = generate(g, {full(g)});
  EXPECT_TRUE(oracle_classify(bounded, PointSet(g)).flags.small);
  const CoarseSpace discrete = generate(g, {});
  EXPECT_FALSE(oracle_classify(discrete, PointSet(g, {0})).flags.large);
}

TEST(Degenerate, EmptyGroundConventions) {
  const CoarseSpace c = generate(make_ground(0), {});
  const PointSet a(c.ground());
  const SizeFlags f = classify(c, a).flags;
  EXPECT_TRUE(f.large);
  EXPECT_TRUE(f.thick);
  EXPECT_TRUE(f.piecewise_large);
  EXPECT_TRUE(f.extralarge);
  EXPECT_TRUE(f.thin);
  EXPECT_FALSE(f.small);
  EXPECT_FALSE(f.slim);
  EXPECT_FALSE(f.meshy);
  EXPECT_FALSE(f.slim_interior);
  EXPECT_EQ(SizeOracle(c).flags(a), f);
}

TEST(Degenerate, OnePointConventions) {
  const auto g = make_ground(1);
  const CoarseSpace c = generate(g, {});
  const SizeFlags whole = classify(c, PointSet::all(g)).flags;
  EXPECT_TRUE(whole.large && whole.thick && whole.piecewise_large && whole.extralarge && whole.thin);
  EXPECT_FALSE(whole.small);
  const SizeFlags none = classify(c, PointSet(g)).flags;
  EXPECT_FALSE(none.large || none.thick || none.piecewise_large || none.extralarge);
  EXPECT_TRUE(none.small && none.thin);
}

TEST(LatticeCriteria, AllSpacesUpToFive) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& c : all_coarse_spaces(n)) {
      const auto subsets = all_subsets(c.ground());
      for (const auto& a : subsets) {
        bool meets = true, inter_large = true, diff_large = true, union_meshy = true;
        for (const auto& l : subsets) {
          if (is_large(c, l)) {
            meets = meets && l.intersects(a);
            inter_large = inter_large && is_large(c, l & a);
            diff_large = diff_large && is_large(c, l - a);
          }
          if (is_meshy(c, l)) union_meshy = union_meshy && is_meshy(c, a | l);
        }
        ASSERT_EQ(is_thick(c, a), meets);
        ASSERT_EQ(is_extralarge(c, a), inter_large);
        ASSERT_EQ(is_small(c, a), diff_large);
        ASSERT_EQ(is_small(c, a), union_meshy);
      }
    }
}

TEST(LargeInSubspace, Transitivity) {
  Rng rng(2024);
  int hypotheses = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto g = make_ground(1 + rng.below(6));
    const CoarseSpace c = rng.space(g);
    const PointSet b = rng.subset(g, 2, 3);
    const PointSet a = rng.subset(g, 2, 3) & b;
    if (is_large_in(c, a, b) && is_large(c, b)) {
      ++hypotheses;
      ASSERT_TRUE(is_large(c, a));
    }
  }
  EXPECT_GT(hypotheses, 100);
  const auto g = make_ground(2);
  EXPECT_THROW(is_large_in(generate(g, {}), PointSet(g, {0}), PointSet(g, {1})), StructuralError);
}

TEST(BoundedIsMeshy, FiniteSurrogate) {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& c : all_coarse_spaces(n)) {
      if (c.classes().size() < 2) continue;
      const Bornology born = induced_bornology(c);
      for (const auto& a : all_subsets(c.ground())) {
        if (!born.is_bounded(a) || a.empty()) continue;
        const PointSet& k = c.class_containing(a.members().front());
        ASSERT_EQ(is_meshy(c, a), !(a == k));
      }
    }
}

TEST(Thin, SatelliteAgreementOnConnectedSpaces) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& c : all_coarse_spaces(n)) {
      const bool same = satellite(c.ground(), induced_bornology(c)).emax() == c.emax();
      // Finite bornologies are generated by the classes, so the satellite always recovers emax.
      ASSERT_TRUE(same);
      if (is_connected(c)) { ASSERT_EQ(is_thin(c, PointSet::all(c.ground())), same); }
    }
}

TEST(Thin, DisconnectedSpacesNeedNotBeThin) {
  const auto g = make_ground(4);
  const CoarseSpace c = from_partition(g, {{0, 1}, {2, 3}});
  EXPECT_EQ(satellite(g, induced_bornology(c)).emax(), c.emax());
  EXPECT_FALSE(is_thin(c, PointSet::all(g)));
}
