#pragma once

// Size properties of subsets of a finite coarse space.
//
// E -> E[A] is monotone and E -> intr_E(A) is antitone, so every "for some E"
// or "for all E" quantifier over the coarse structure is decided at emax.
// oracle_classify evaluates the definitions literally, quantifying over every
// subset of emax, and exists to check that reduction.
//
// Empty ground set conventions: A = {} is large, thick, piecewise large,
// extralarge and thin, and is not small.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "coarse/coarse_space.hpp"

namespace coarse {

struct SizeFlags {
  bool large = false;
  bool slim = false;
  bool thick = false;
  bool meshy = false;
  bool piecewise_large = false;
  bool small = false;
  bool extralarge = false;
  bool slim_interior = false;
  bool thin = false;

  friend bool operator==(const SizeFlags&, const SizeFlags&) = default;
};

struct SizeWitnesses {
  std::optional<PointSet> thick_class;      // a class inside A
  std::optional<PointSet> missed_class;     // a class A misses (A not large)
  std::optional<PointSet> core_missed_class;// a class core(A) misses (A not extralarge)
  std::optional<PointSet> swallowed_class;  // a class inside gal(A) (A not small)
  std::optional<PointSet> thin_excision;    // bounded B after which A is separated
  std::optional<std::pair<Index, Index>> thin_violation;  // colliding pair surviving every excision
};

struct SizeReport {
  SizeFlags flags;
  SizeWitnesses witnesses;
};

namespace detail {

inline void require_space_subset(const CoarseSpace& c, const PointSet& a, const char* what) {
  require_same_ground(c.ground(), a.ground(), what);
}

inline const PointSet* first_class_missing(const CoarseSpace& c, const PointSet& a) {
  for (const auto& k : c.classes())
    if (!k.intersects(a)) return &k;
  return nullptr;
}

}  // namespace detail

inline bool is_large(const CoarseSpace& c, const PointSet& a) {
  detail::require_space_subset(c, a, "is_large");
  return detail::first_class_missing(c, a) == nullptr;
}

inline bool is_slim(const CoarseSpace& c, const PointSet& a) { return !is_large(c, a); }

inline bool is_thick(const CoarseSpace& c, const PointSet& a) {
  detail::require_space_subset(c, a, "is_thick");
  if (c.size() == 0) return true;
  return !core(c, a).empty();
}

inline bool is_meshy(const CoarseSpace& c, const PointSet& a) { return !is_thick(c, a); }

inline bool is_piecewise_large(const CoarseSpace& c, const PointSet& a) { return is_thick(c, gal(c, a)); }

inline bool is_small(const CoarseSpace& c, const PointSet& a) {
  detail::require_space_subset(c, a, "is_small");
  if (c.size() == 0) return false;
  return is_large(c, gal(c, a).complement());
}

inline bool is_extralarge(const CoarseSpace& c, const PointSet& a) { return is_large(c, core(c, a)); }

inline bool has_slim_interior(const CoarseSpace& c, const PointSet& a) { return !is_extralarge(c, a); }

inline bool is_thin(const CoarseSpace& c, const PointSet& a) {
  detail::require_space_subset(c, a, "is_thin");
  std::size_t doubled = 0;
  for (const auto& k : c.classes())
    if ((k & a).size() >= 2) ++doubled;
  return doubled <= 1;
}

/// A large in the subspace B (A must lie in B): A meets every class of B.
inline bool is_large_in(const CoarseSpace& c, const PointSet& a, const PointSet& b) {
  detail::require_space_subset(c, a, "is_large_in");
  detail::require_space_subset(c, b, "is_large_in");
  if (!a.is_subset_of(b)) throw StructuralError("is_large_in: A is not a subset of B");
  for (const auto& k : c.classes())
    if (k.intersects(b) && !k.intersects(a)) return false;
  return true;
}

inline SizeReport classify(const CoarseSpace& c, const PointSet& a) {
  SizeReport r;
  auto& f = r.flags;
  f.large = is_large(c, a);
  f.slim = !f.large;
  f.thick = is_thick(c, a);
  f.meshy = !f.thick;
  f.piecewise_large = is_piecewise_large(c, a);
  f.small = is_small(c, a);
  f.extralarge = is_extralarge(c, a);
  f.slim_interior = !f.extralarge;
  f.thin = is_thin(c, a);

  auto& w = r.witnesses;
  if (const PointSet* k = detail::first_class_missing(c, a)) w.missed_class = *k;
  for (const auto& k : c.classes())
    if (k.is_subset_of(a)) {
      w.thick_class = k;
      break;
    }
  if (!f.extralarge)
    if (const PointSet* k = detail::first_class_missing(c, core(c, a))) w.core_missed_class = *k;
  if (!f.small)
    for (const auto& k : c.classes())
      if (k.intersects(a)) {
        w.swallowed_class = k;
        break;
      }
  // Thin: excise the first class holding two points of A; a second such class
  // yields a colliding pair no bounded set can remove.
  std::optional<PointSet> excised;
  for (const auto& k : c.classes()) {
    const PointSet part = k & a;
    if (part.size() < 2) continue;
    if (!excised) {
      excised = part;
      continue;
    }
    const auto m = part.members();
    w.thin_violation = std::make_pair(m[0], m[1]);
    break;
  }
  if (f.thin) w.thin_excision = excised ? *excised : PointSet(c.ground());
  return r;
}

// ---------------------------------------------------------------------------
// Definitional oracle

/// Precomputed literal evaluation of every size predicate on every subset of
/// a small coarse space. Entourages range over all subsets of emax; bounded
/// sets are the B with B x B inside emax. Works on bitmasks and shares no code
/// with the fast predicates above.
class SizeOracle {
 public:
  static constexpr std::size_t kMaxPairs = 16;
  static constexpr std::size_t kMaxPoints = 8;

  explicit SizeOracle(const CoarseSpace& c) : ground_(c.ground()), n_(c.size()) {
    const auto pairs = c.emax().pairs();
    if (pairs.size() > kMaxPairs)
      throw CapacityError("oracle_classify: emax has " + std::to_string(pairs.size()) + " pairs (limit 16)");
    if (n_ > kMaxPoints) throw CapacityError("oracle_classify: ground larger than 8 points");
    const std::uint32_t subsets = 1U << n_;
    const Mask everything = subsets - 1;
    const std::uint32_t relations = 1U << pairs.size();
    flags_.resize(subsets);
    if (n_ == 0) {
      flags_[0] = empty_space_flags();
      return;
    }

    std::vector<bool> bounded(subsets);
    for (Mask s = 0; s < subsets; ++s) {
      bool ok = true;
      for (Index x = 0; x < n_ && ok; ++x)
        for (Index y = 0; y < n_ && ok; ++y)
          if ((s >> x & 1U) && (s >> y & 1U)) ok = c.emax().contains(x, y);
      bounded[s] = ok;
    }
    std::vector<Mask> bounded_sets;
    for (Mask s = 0; s < subsets; ++s)
      if (bounded[s]) bounded_sets.push_back(s);

    std::vector<Mask> rows(n_);
    auto load = [&](std::uint32_t code) {
      std::fill(rows.begin(), rows.end(), 0);
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (code >> k & 1U) rows[pairs[k].first] |= Mask{1} << pairs[k].second;
    };
    auto closure_of = [&](Mask s) {
      Mask out = 0;
      for (Index x = 0; x < n_; ++x)
        if (s >> x & 1U) out |= rows[x];
      return out;
    };
    auto interior_of = [&](Mask s) {
      Mask out = 0;
      for (Index x = 0; x < n_; ++x)
        if ((rows[x] & ~s) == 0) out |= Mask{1} << x;
      return out;
    };
    // No two distinct points of s have intersecting balls.
    auto separated = [&](Mask s) {
      for (Index x = 0; x < n_; ++x)
        for (Index y = x + 1; y < n_; ++y)
          if ((s >> x & 1U) && (s >> y & 1U) && (rows[x] & rows[y])) return false;
      return true;
    };

    // Pass 1: the first-order predicates on every subset.
    std::vector<bool> large(subsets, false), slim(subsets, true), thick(subsets, true);
    for (std::uint32_t code = 0; code < relations; ++code) {
      load(code);
      for (Mask s = 0; s < subsets; ++s) {
        const bool covers = closure_of(s) == everything;
        if (covers) large[s] = true;
        if (covers) slim[s] = false;
        if (interior_of(s) == 0) thick[s] = false;
      }
    }
    for (Mask s = 0; s < subsets; ++s) {
      flags_[s].large = large[s];
      flags_[s].slim = slim[s];
      flags_[s].thick = thick[s];
      flags_[s].meshy = !thick[s];
      flags_[s].small = true;
      flags_[s].extralarge = true;
      flags_[s].thin = true;
    }

    // Pass 2: predicates nesting a second quantifier.
    std::vector<bool> thin_here(subsets);
    for (std::uint32_t code = 0; code < relations; ++code) {
      load(code);
      std::vector<bool> sep(subsets);
      for (Mask s = 0; s < subsets; ++s) sep[s] = separated(s);
      for (Mask a = 0; a < subsets; ++a) {
        auto& f = flags_[a];
        const Mask grown = closure_of(a);
        const Mask inner = interior_of(a);
        if (thick[grown]) f.piecewise_large = true;
        if (!large[everything & ~grown]) f.small = false;
        if (!large[inner]) f.extralarge = false;
        if (slim[inner]) f.slim_interior = true;
        bool some_b = false;
        for (Mask b : bounded_sets)
          if (sep[a & ~b]) {
            some_b = true;
            break;
          }
        if (!some_b) f.thin = false;
      }
    }
  }

  const GroundPtr& ground() const { return ground_; }

  SizeFlags flags(const PointSet& a) const {
    require_same_ground(ground_, a.ground(), "oracle_classify");
    return flags_[static_cast<Mask>(a.bits().low_word())];
  }

  static SizeFlags empty_space_flags() {
    SizeFlags f;
    f.large = f.thick = f.piecewise_large = f.extralarge = f.thin = true;
    return f;
  }

 private:
  using Mask = std::uint32_t;

  GroundPtr ground_;
  std::size_t n_;
  std::vector<SizeFlags> flags_;
};

/// Slow definitional evaluator; flags only, no witnesses.
inline SizeReport oracle_classify(const CoarseSpace& c, const PointSet& a) {
  require_same_ground(c.ground(), a.ground(), "oracle_classify");
  SizeReport r;
  r.flags = SizeOracle(c).flags(a);
  return r;
}

}  // namespace coarse
