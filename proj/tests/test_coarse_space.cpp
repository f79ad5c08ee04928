#include <gtest/gtest.h>

#include "coarse/coarse_space.hpp"
#include "coarse/enumerate.hpp"

using namespace coarse;

namespace {

std::vector<std::vector<Index>> blocks_of(const CoarseSpace& c) {
  std::vector<std::vector<Index>> out;
  for (const auto& k : c.classes()) out.push_back(k.members());
  return out;
}

using Blocks = std::vector<std::vector<Index>>;

}  // namespace

TEST(Generate, Examples) {
  const auto g = make_ground(3);
  EXPECT_EQ(generate(g, {}).emax(), diagonal(g));
  const CoarseSpace c = generate(g, {Entourage(g, {{0, 1}})});
  EXPECT_EQ(c.emax(), unite(diagonal(g), Entourage(g, {{0, 1}, {1, 0}})));
  EXPECT_EQ(blocks_of(c), (Blocks{{0, 1}, {2}}));
  EXPECT_EQ(generate(g, {full(g)}).emax(), full(g));
}

TEST(Generate, GroundMismatchThrows) {
  EXPECT_THROW(generate(make_ground(3), {Entourage(make_ground(4))}), StructuralError);
}

TEST(Generate, UnionFindMatchesFixpoint) {
  Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = make_ground(rng.below(9));
    std::vector<Entourage> gens;
    for (auto k = rng.below(4); k > 0; --k) gens.push_back(rng.relation(g, 1, 8));
    const CoarseSpace c = generate(g, gens);
    ASSERT_EQ(c.emax(), equivalence_fixpoint(g, gens));
  }
}

TEST(Generate, EmaxIsAnEquivalenceAndContainsGenerators) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = make_ground(rng.below(8));
    const std::vector<Entourage> gens{rng.relation(g, 1, 6), rng.relation(g, 1, 6)};
    const CoarseSpace c = generate(g, gens);
    const Entourage& m = c.emax();
    ASSERT_TRUE(is_subset(diagonal(g), m));
    ASSERT_EQ(invert(m), m);
    ASSERT_EQ(compose(m, m), m);
    for (const auto& gen : gens) ASSERT_TRUE(contains(c, gen));
  }
}

TEST(Contains, CoarseStructureAxioms) {
  Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = make_ground(1 + rng.below(7));
    const CoarseSpace c = rng.space(g);
    ASSERT_TRUE(contains(c, diagonal(g)));
    // Random members of the structure: sub-relations of emax.
    Entourage e(g), f(g);
    for (const auto& [x, y] : c.emax().pairs()) {
      if (rng.coin()) e.insert(x, y);
      if (rng.coin()) f.insert(x, y);
    }
    ASSERT_TRUE(contains(c, compose(e, f)));
    ASSERT_TRUE(contains(c, unite(e, f)));
    ASSERT_TRUE(contains(c, invert(e)));
  }
}

TEST(Contains, Examples) {
  const auto g2 = make_ground(2);
  EXPECT_FALSE(contains(generate(g2, {}), Entourage(g2, {{0, 1}})));
  const CoarseSpace c = generate(g2, {Entourage(g2, {{0, 1}})});
  EXPECT_TRUE(contains(c, Entourage(g2, {{1, 0}, {0, 0}})));
}

TEST(Bornology, InducedExamples) {
  const auto g = make_ground(3);
  EXPECT_EQ(induced_bornology(generate(g, {})).maximal().size(), 3u);
  const CoarseSpace two = from_partition(g, {{0, 1}, {2}});
  const Bornology born = induced_bornology(two);
  const auto& m = born.maximal();
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0].members(), (std::vector<Index>{0, 1}));
  EXPECT_EQ(m[1].members(), (std::vector<Index>{2}));
  EXPECT_EQ(induced_bornology(generate(g, {full(g)})).maximal(), (std::vector<PointSet>{PointSet::all(g)}));
}

TEST(Bornology, BoundedIffSquareInsideEmax) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& c : all_coarse_spaces(n)) {
      const Bornology b = induced_bornology(c);
      for (const auto& s : all_subsets(c.ground())) ASSERT_EQ(b.is_bounded(s), is_subset(square(s), c.emax()));
    }
}

TEST(Bornology, CanonicalAntichain) {
  const auto g = make_ground(4);
  const Bornology b(g, {PointSet(g, {2}), PointSet(g, {0, 1}), PointSet(g, {0}), PointSet(g, {0, 1}), PointSet(g, {3})});
  ASSERT_EQ(b.maximal().size(), 3u);
  EXPECT_EQ(b.maximal()[0].members(), (std::vector<Index>{0, 1}));
  EXPECT_EQ(b.maximal()[1].members(), (std::vector<Index>{2}));
  EXPECT_TRUE(b.covers());
  EXPECT_EQ(b, Bornology(g, {PointSet(g, {3}), PointSet(g, {2}), PointSet(g, {1, 0})}));
}

TEST(Bornology, InducedIsPrebornologyAndUnionRules) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& c : all_coarse_spaces(n)) {
      const Bornology b = induced_bornology(c);
      EXPECT_TRUE(b.is_prebornology());
      EXPECT_EQ(b.is_bornology(), is_connected(c));
      // Downward closure and non-disjoint unions, checked on all subsets.
      const auto subsets = all_subsets(c.ground());
      for (const auto& s : subsets) {
        if (!b.is_bounded(s)) continue;
        for (const auto& t : subsets) {
          if (t.is_subset_of(s)) { ASSERT_TRUE(b.is_bounded(t)); }
          if (b.is_bounded(t) && s.intersects(t)) { ASSERT_TRUE(b.is_bounded(s | t)); }
        }
      }
    }
}

TEST(Components, Connectedness) {
  const auto g2 = make_ground(2);
  EXPECT_FALSE(is_connected(generate(g2, {})));
  EXPECT_TRUE(is_connected(generate(g2, {full(g2)})));
  EXPECT_FALSE(is_connected(from_partition(make_ground(3), {{0, 1}, {2}})));
  const CoarseSpace empty = generate(make_ground(0), {});
  EXPECT_TRUE(is_connected(empty));
  EXPECT_TRUE(components(empty).empty());
}

TEST(Components, SingletonAndWholeBlocks) {
  const auto g = make_ground(4);
  EXPECT_EQ(blocks_of(generate(g, {})), (Blocks{{0}, {1}, {2}, {3}}));
  EXPECT_EQ(blocks_of(generate(g, {full(g)})), (Blocks{{0, 1, 2, 3}}));
  EXPECT_EQ(blocks_of(from_labels(g, {1, 0, 1, 0})), (Blocks{{0, 2}, {1, 3}}));
  EXPECT_THROW(from_labels(g, {0, 9, 0, 0}), InputError);
}

TEST(Enumerate, BellNumbers) {
  const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203};
  for (std::size_t n = 0; n < bell.size(); ++n) EXPECT_EQ(all_partitions(n).size(), bell[n]) << n;
  // Distinct structures.
  const auto spaces = all_coarse_spaces(4);
  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (std::size_t j = i + 1; j < spaces.size(); ++j) EXPECT_FALSE(spaces[i].emax() == spaces[j].emax());
}

TEST(Ideal, Examples) {
  const auto g = make_ground(3);
  EXPECT_EQ(ideal_coarse(g, {}).emax(), diagonal(g));
  EXPECT_EQ(ideal_coarse(g, {PointSet(g, {0, 1}), PointSet(g, {1, 2})}).emax(), full(g));
  EXPECT_EQ(ideal_coarse(g, {PointSet(g, {0}), PointSet(g, {2})}).emax(), diagonal(g));
}

TEST(Satellite, Examples) {
  const auto g = make_ground(3);
  EXPECT_EQ(satellite(g, induced_bornology(generate(g, {}))).emax(), diagonal(g));
  const CoarseSpace two = from_partition(g, {{0, 1}, {2}});
  EXPECT_EQ(blocks_of(satellite(g, induced_bornology(two))), (Blocks{{0, 1}, {2}}));
  EXPECT_EQ(satellite(g, Bornology(g, {PointSet::all(g)})).emax(), full(g));
}

TEST(Satellite, BelowEveryStructure) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& c : all_coarse_spaces(n))
      EXPECT_TRUE(is_subset(satellite(c.ground(), induced_bornology(c)).emax(), c.emax()));
}

TEST(GalaxyCore, Examples) {
  const auto g = make_ground(3);
  const CoarseSpace c = from_partition(g, {{0, 1}, {2}});
  EXPECT_TRUE(gal(c, PointSet(g)).empty());
  EXPECT_EQ(core(c, PointSet::all(g)), PointSet::all(g));
  EXPECT_EQ(gal(c, PointSet(g, {0})).members(), (std::vector<Index>{0, 1}));
  EXPECT_TRUE(core(c, PointSet(g, {0})).empty());
  EXPECT_EQ(core(c, PointSet(g, {0, 1})).members(), (std::vector<Index>{0, 1}));
}

TEST(GalaxyCore, ClosureInteriorLaws) {
  Rng rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = make_ground(rng.below(9));
    const CoarseSpace c = rng.space(g);
    const PointSet a = rng.subset(g), b = rng.subset(g);
    const PointSet all = PointSet::all(g);
    ASSERT_TRUE(a.is_subset_of(gal(c, a)));
    ASSERT_TRUE(gal(c, PointSet(g)).empty());
    ASSERT_EQ(gal(c, gal(c, a)), gal(c, a));
    ASSERT_EQ(gal(c, a | b), gal(c, a) | gal(c, b));
    ASSERT_TRUE(core(c, a).is_subset_of(a));
    ASSERT_EQ(core(c, all), all);
    ASSERT_EQ(core(c, core(c, a)), core(c, a));
    ASSERT_EQ(core(c, a & b), core(c, a) & core(c, b));
    ASSERT_EQ(core(c, a).complement(), gal(c, a.complement()));
    ASSERT_EQ(gal(c, core(c, a)), core(c, a));
  }
}

TEST(GalaxyCore, EmptyGround) {
  const CoarseSpace c = generate(make_ground(0), {});
  EXPECT_TRUE(gal(c, PointSet(c.ground())).empty());
  EXPECT_TRUE(core(c, PointSet(c.ground())).empty());
}
