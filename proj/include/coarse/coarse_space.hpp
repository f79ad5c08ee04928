#pragma once

// Finitely generated coarse structures on finite ground sets.
//
// On a finite set, closing a family of generators under diagonal, inversion,
// composition and finite unions yields a family with a maximum element emax,
// and the generated coarse structure is exactly the down-set of emax. emax is
// the equivalence relation generated by the union of the generators. So one
// memoized relation answers every membership query: E is controlled iff
// E is a subset of emax. The emax classes are the connected components and
// also the maximal bounded sets.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "coarse/relation.hpp"

namespace coarse {

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Index{0}); }
  Index find(Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<Index> parent_;
};

}  // namespace detail

/// Least fixpoint of R -> R u diag u R^-1 u R.R u (union of gens), by direct
/// iteration. Cubic per round; kept as the literal definition used to check
/// the union-find construction in CoarseSpace.
inline Entourage equivalence_fixpoint(const GroundPtr& ground, const std::vector<Entourage>& gens) {
  Entourage r = diagonal(ground);
  for (const auto& g : gens) r = unite(r, g);
  for (;;) {
    Entourage next = unite(unite(r, invert(r)), compose(r, r));
    if (next == r) return r;
    r = std::move(next);
  }
}

enum class UnionRule {
  kPrebornological,  // unions of intersecting bounded sets stay bounded
  kUnrestricted,     // all finite unions stay bounded (a bornology proper)
};

/// Downward-closed family of bounded sets, stored as its maximal members.
class Bornology {
 public:
  Bornology(GroundPtr ground, std::vector<PointSet> members) : ground_(std::move(ground)) {
    for (auto& m : members) require_same_ground(ground_, m.ground(), "Bornology");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < members.size() && !dominated; ++j)
        dominated = i != j && members[i].is_subset_of(members[j]);
      if (!dominated) maximal_.push_back(members[i]);
    }
  }

  const GroundPtr& ground() const { return ground_; }
  /// Canonical antichain, sorted lexicographically.
  const std::vector<PointSet>& maximal() const { return maximal_; }

  bool is_bounded(const PointSet& b) const {
    require_same_ground(ground_, b.ground(), "is_bounded");
    if (b.empty()) return true;
    return std::any_of(maximal_.begin(), maximal_.end(), [&](const PointSet& m) { return b.is_subset_of(m); });
  }

  bool covers() const {
    PointSet u(ground_);
    for (const auto& m : maximal_) u |= m;
    return u.size() == ground_->size();
  }

  /// Whether the family is closed under the given union rule. The family is
  /// downward closed by construction, so only maximal members need checking.
  bool is_closed_under(UnionRule rule) const {
    for (std::size_t i = 0; i < maximal_.size(); ++i)
      for (std::size_t j = i + 1; j < maximal_.size(); ++j) {
        if (rule == UnionRule::kPrebornological && !maximal_[i].intersects(maximal_[j])) continue;
        if (!is_bounded(maximal_[i] | maximal_[j])) return false;
      }
    return true;
  }

  bool is_prebornology() const { return covers() && is_closed_under(UnionRule::kPrebornological); }
  bool is_bornology() const { return covers() && is_closed_under(UnionRule::kUnrestricted); }

  friend bool operator==(const Bornology& a, const Bornology& b) {
    return same_ground(a.ground_, b.ground_) && a.maximal_ == b.maximal_;
  }

 private:
  GroundPtr ground_;
  std::vector<PointSet> maximal_;
};

/// A finite ground set with a finitely generated coarse structure.
class CoarseSpace {
 public:
  CoarseSpace(GroundPtr ground, std::vector<Entourage> generators)
      : ground_(std::move(ground)), generators_(std::move(generators)), emax_(ground_), class_of_(ground_->size()) {
    const std::size_t n = ground_->size();
    detail::DisjointSets dsu(n);
    for (const auto& g : generators_) {
      require_same_ground(ground_, g.ground(), "generate");
      for (Index x = 0; x < n; ++x) g.row(x).for_each([&](Index y) { dsu.unite(x, y); });
    }
    std::vector<Index> root_to_class(n, n);
    for (Index x = 0; x < n; ++x) {
      const Index root = dsu.find(x);
      if (root_to_class[root] == n) {
        root_to_class[root] = classes_.size();
        classes_.emplace_back(ground_);
      }
      class_of_[x] = root_to_class[root];
      classes_[class_of_[x]].insert(x);
    }
    for (Index x = 0; x < n; ++x) emax_.row(x) = classes_[class_of_[x]].bits();
  }

  const GroundPtr& ground() const { return ground_; }
  std::size_t size() const { return ground_->size(); }
  const std::vector<Entourage>& generators() const { return generators_; }
  /// Maximal controlled entourage (an equivalence relation).
  const Entourage& emax() const { return emax_; }

  /// Classes ordered by their least element.
  const std::vector<PointSet>& classes() const { return classes_; }
  Index class_of(Index x) const { return class_of_[x]; }
  const PointSet& class_containing(Index x) const { return classes_[class_of_[x]]; }

 private:
  GroundPtr ground_;
  std::vector<Entourage> generators_;
  Entourage emax_;
  std::vector<Index> class_of_;
  std::vector<PointSet> classes_;
};

inline CoarseSpace generate(GroundPtr ground, std::vector<Entourage> gens) {
  return CoarseSpace(std::move(ground), std::move(gens));
}

/// Coarse space whose emax classes are the given blocks.
inline CoarseSpace from_partition(const GroundPtr& ground, const std::vector<std::vector<Index>>& blocks) {
  Entourage g(ground);
  for (const auto& b : blocks)
    for (std::size_t k = 1; k < b.size(); ++k) g.insert(b[0], b[k]);
  return generate(ground, {std::move(g)});
}

/// Coarse space whose emax classes are given by a class label per point.
inline CoarseSpace from_labels(const GroundPtr& ground, const std::vector<Index>& labels) {
  Entourage g(ground);
  std::vector<Index> first(labels.size() + 1, labels.size());
  for (Index x = 0; x < labels.size(); ++x) {
    if (labels[x] >= labels.size()) throw InputError("class label out of range");
    if (first[labels[x]] == labels.size()) first[labels[x]] = x;
    g.insert(first[labels[x]], x);
  }
  return generate(ground, {std::move(g)});
}

inline bool contains(const CoarseSpace& c, const Entourage& e) {
  require_same_ground(c.ground(), e.ground(), "contains");
  return is_subset(e, c.emax());
}

inline Bornology induced_bornology(const CoarseSpace& c) { return Bornology(c.ground(), c.classes()); }

inline const std::vector<PointSet>& components(const CoarseSpace& c) { return c.classes(); }

inline bool is_connected(const CoarseSpace& c) { return c.classes().size() <= 1; }

/// Structure generated by diag u (A x A) over the members A of an ideal.
inline CoarseSpace ideal_coarse(const GroundPtr& ground, const std::vector<PointSet>& ideal) {
  std::vector<Entourage> gens;
  gens.reserve(ideal.size());
  const Entourage diag = diagonal(ground);
  for (const auto& a : ideal) {
    require_same_ground(ground, a.ground(), "ideal_coarse");
    gens.push_back(unite(diag, square(a)));
  }
  return generate(ground, std::move(gens));
}

/// Ideal coarse structure of a bornology.
inline CoarseSpace satellite(const GroundPtr& ground, const Bornology& born) {
  require_same_ground(ground, born.ground(), "satellite");
  return ideal_coarse(ground, born.maximal());
}

/// Coarse galaxy: union of the classes meeting A.
inline PointSet gal(const CoarseSpace& c, const PointSet& a) { return closure(c.emax(), a); }

/// Galactic core: union of the classes contained in A.
inline PointSet core(const CoarseSpace& c, const PointSet& a) { return interior(c.emax(), a); }

}  // namespace coarse
