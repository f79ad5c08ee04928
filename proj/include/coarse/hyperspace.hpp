#pragma once

// Coarse hyperspaces: families of subsets of a base space, related by the
// exponentiation exp E = {(A, B) | A in E[B] and B in E[A]}.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coarse/coarse_space.hpp"
#include "coarse/enumerate.hpp"
#include "coarse/maps.hpp"
#include "coarse/size.hpp"
#include "coarse/window.hpp"

namespace coarse {

enum class Selector { kAll, kFlat, kLarge, kMeshyNonempty, kExplicit };

inline const char* selector_name(Selector s) {
  switch (s) {
    case Selector::kAll: return "ALL";
    case Selector::kFlat: return "FLAT";
    case Selector::kLarge: return "LARGE";
    case Selector::kMeshyNonempty: return "MESHY_NONEMPTY";
    case Selector::kExplicit: return "EXPLICIT";
  }
  return "EXPLICIT";
}

inline std::optional<Selector> parse_selector(const std::string& s) {
  for (Selector k : {Selector::kAll, Selector::kFlat, Selector::kLarge, Selector::kMeshyNonempty, Selector::kExplicit})
    if (s == selector_name(k)) return k;
  return std::nullopt;
}

inline constexpr std::size_t kMaxAllFamilyGround = 12;
inline constexpr std::size_t kMaxFamilyMembers = 4096;

inline std::string set_label(const PointSet& s) {
  std::string out = "{";
  bool first = true;
  s.bits().for_each([&](Index i) {
    if (!first) out += ",";
    out += s.ground()->label(i);
    first = false;
  });
  return out + "}";
}

/// The points of a hyperspace: an indexed family of subsets of a base ground.
class HyperGround {
 public:
  HyperGround(GroundPtr base, std::vector<PointSet> family, Selector selector)
      : base_(std::move(base)), family_(std::move(family)), selector_(selector) {
    if (family_.size() > kMaxFamilyMembers)
      throw CapacityError("hyperspace family exceeds " + std::to_string(kMaxFamilyMembers) + " members");
    std::vector<std::string> labels;
    labels.reserve(family_.size());
    for (const auto& s : family_) {
      require_same_ground(base_, s.ground(), "HyperGround");
      labels.push_back(set_label(s));
    }
    ground_ = make_ground(family_.size(), std::move(labels));
  }

  const GroundPtr& base() const { return base_; }
  const GroundPtr& ground() const { return ground_; }
  const std::vector<PointSet>& family() const { return family_; }
  Selector selector() const { return selector_; }
  std::size_t size() const { return family_.size(); }

  std::optional<Index> index_of(const PointSet& s) const {
    auto it = std::find(family_.begin(), family_.end(), s);
    if (it == family_.end()) return std::nullopt;
    return static_cast<Index>(it - family_.begin());
  }

 private:
  GroundPtr base_;
  std::vector<PointSet> family_;
  Selector selector_;
  GroundPtr ground_;
};

// ---------------------------------------------------------------------------
// Families

inline std::vector<PointSet> family_all(const GroundPtr& ground) {
  if (ground->size() > kMaxAllFamilyGround)
    throw CapacityError("ALL family requires a ground of at most 12 points");
  return all_subsets(ground);
}

/// Non-empty bounded subsets: the non-empty subsets of each class.
inline std::vector<PointSet> family_flat(const CoarseSpace& c) {
  std::vector<PointSet> out;
  for (const auto& k : c.classes()) {
    const auto members = k.members();
    if (members.size() >= 13) throw CapacityError("FLAT family exceeds 4096 members");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << members.size()); ++mask) {
      PointSet s(c.ground());
      for (std::size_t b = 0; b < members.size(); ++b)
        if (mask >> b & 1U) s.insert(members[b]);
      out.push_back(std::move(s));
      if (out.size() > kMaxFamilyMembers) throw CapacityError("FLAT family exceeds 4096 members");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

template <class Keep>
std::vector<PointSet> filtered_subsets(const CoarseSpace& c, Keep keep, const char* what) {
  std::vector<PointSet> out;
  for (auto& s : all_subsets(c.ground()))
    if (keep(s)) {
      out.push_back(std::move(s));
      if (out.size() > kMaxFamilyMembers) throw CapacityError(std::string(what) + " family exceeds 4096 members");
    }
  return out;
}

}  // namespace detail

inline std::vector<PointSet> family_large(const CoarseSpace& c) {
  return detail::filtered_subsets(c, [&](const PointSet& s) { return is_large(c, s); }, "LARGE");
}

inline std::vector<PointSet> family_meshy_nonempty(const CoarseSpace& c) {
  return detail::filtered_subsets(c, [&](const PointSet& s) { return !s.empty() && is_meshy(c, s); },
                                  "MESHY_NONEMPTY");
}

inline std::vector<PointSet> family_singletons(const GroundPtr& ground) {
  std::vector<PointSet> out;
  for (Index x = 0; x < ground->size(); ++x) out.push_back(PointSet(ground, {x}));
  return out;
}

inline HyperGround hyper_ground(const CoarseSpace& c, Selector selector) {
  switch (selector) {
    case Selector::kAll: return HyperGround(c.ground(), family_all(c.ground()), selector);
    case Selector::kFlat: return HyperGround(c.ground(), family_flat(c), selector);
    case Selector::kLarge: return HyperGround(c.ground(), family_large(c), selector);
    case Selector::kMeshyNonempty: return HyperGround(c.ground(), family_meshy_nonempty(c), selector);
    case Selector::kExplicit: break;
  }
  throw InputError("EXPLICIT families must be passed as a list of sets");
}

// ---------------------------------------------------------------------------
// Exponentiation and the Hausdorff metric

/// (A, B) in exp E.
inline bool exp_related(const Entourage& e, const PointSet& a, const PointSet& b) {
  return a.is_subset_of(closure(e, b)) && b.is_subset_of(closure(e, a));
}

/// exp E restricted to the family.
inline Entourage exp_entourage(const Entourage& e, const HyperGround& h) {
  require_same_ground(e.ground(), h.base(), "exp_entourage");
  std::vector<BitSet> grown;
  grown.reserve(h.size());
  for (const auto& s : h.family()) grown.push_back(closure(e, s).bits());
  Entourage out(h.ground());
  for (Index i = 0; i < h.size(); ++i)
    for (Index j = 0; j < h.size(); ++j)
      if (h.family()[i].bits().is_subset_of(grown[j]) && h.family()[j].bits().is_subset_of(grown[i]))
        out.row(i).set(j);
  return out;
}

/// max(sup_a d(a, B), sup_b d(b, A)); 0 for two empty sets and
/// kInfiniteDistance when exactly one is empty.
inline Distance hausdorff_distance(const PointSet& a, const PointSet& b) {
  require_same_ground(a.ground(), b.ground(), "hausdorff_distance");
  const GroundSet& g = *a.ground();
  if (!g.has_metric()) throw StructuralError("hausdorff_distance: ground carries no metric");
  if (a.empty() && b.empty()) return 0;
  if (a.empty() || b.empty()) return kInfiniteDistance;
  auto directed = [&](const PointSet& from, const PointSet& to) {
    Distance worst = 0;
    from.bits().for_each([&](Index x) {
      Distance best = kInfiniteDistance;
      to.bits().for_each([&](Index y) { best = std::min(best, g.distance(x, y)); });
      worst = std::max(worst, best);
    });
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

// ---------------------------------------------------------------------------
// Hyperspace coarse structures

struct HyperSpace {
  HyperGround points;
  CoarseSpace space;
  /// Whether closing the generators strictly enlarged exp(emax).
  bool reclosure_enlarged = false;
};

/// Generated by exp of every base generator together with exp(emax).
inline HyperSpace hyper_coarse(const CoarseSpace& base, HyperGround points) {
  require_same_ground(base.ground(), points.base(), "hyper_coarse");
  std::vector<Entourage> gens;
  for (const auto& g : base.generators()) gens.push_back(exp_entourage(g, points));
  Entourage top = exp_entourage(base.emax(), points);
  gens.push_back(top);
  CoarseSpace space = generate(points.ground(), std::move(gens));
  const bool enlarged = space.emax() != top;
  return HyperSpace{std::move(points), std::move(space), enlarged};
}

inline HyperSpace hyper_coarse(const CoarseSpace& base, Selector selector) {
  return hyper_coarse(base, hyper_ground(base, selector));
}

struct Verdict {
  bool pass = false;
  std::optional<IndexPair> counterexample;
  std::string detail;
};

/// x -> {x} into the given hyperspace (which must contain every singleton).
inline Map iota_map(const HyperSpace& h) {
  std::vector<Index> t(h.points.base()->size());
  for (Index x = 0; x < t.size(); ++x) {
    auto idx = h.points.index_of(PointSet(h.points.base(), {x}));
    if (!idx) throw StructuralError("iota: family lacks a singleton");
    t[x] = *idx;
  }
  return Map(h.points.base(), h.points.ground(), std::move(t));
}

/// x -> {x} into the singleton family, checked as an asymorphic embedding.
/// The singleton family keeps the check linear in the base size; on the ALL
/// family the induced subspace structure on singletons is identical.
inline Verdict iota_check(const CoarseSpace& base, Selector selector = Selector::kExplicit) {
  const HyperSpace h = selector == Selector::kExplicit
                           ? hyper_coarse(base, HyperGround(base.ground(), family_singletons(base.ground()), selector))
                           : hyper_coarse(base, selector);
  const Map iota = iota_map(h);
  Verdict v;
  if (!iota.is_injective()) {
    v.detail = "iota is not injective";
    return v;
  }
  if (auto bad = bornologous_violation(iota, base, h.space)) {
    v.counterexample = bad;
    v.detail = "iota is not bornologous";
    return v;
  }
  if (auto bad = effective_properness_violation(iota, base, h.space)) {
    v.counterexample = bad;
    v.detail = "iota is not effectively proper";
    return v;
  }
  v.pass = true;
  v.detail = "asymorphic embedding";
  return v;
}

struct CMapReport {
  bool injective = false;
  bool bornologous = false;
  bool effectively_proper = false;
  std::optional<IndexPair> bornologous_violation;
  std::optional<IndexPair> effective_properness_violation;
  /// Finite mode passes when c is a bornologous injection.
  bool pass() const { return injective && bornologous; }
};

/// x -> X \ {x} into the ALL hyperspace of a finite base.
inline CMapReport c_map_check(const CoarseSpace& base) {
  const HyperSpace h = hyper_coarse(base, Selector::kAll);
  std::vector<Index> t(base.size());
  for (Index x = 0; x < base.size(); ++x) {
    PointSet s = PointSet::all(base.ground());
    s.erase(x);
    t[x] = *h.points.index_of(s);
  }
  const Map c(base.ground(), h.points.ground(), std::move(t));
  CMapReport r;
  r.injective = c.is_injective();
  r.bornologous_violation = bornologous_violation(c, base, h.space);
  r.bornologous = !r.bornologous_violation;
  r.effective_properness_violation = effective_properness_violation(c, base, h.space);
  r.effectively_proper = !r.effective_properness_violation;
  return r;
}

struct CMapWindowReport {
  Distance scale = 0;
  Distance separation = 0;
  Distance excision = 0;
  /// Least (x, y) beyond ball(excision) with (c(x), c(y)) in exp E_r and d(x, y) > separation.
  std::optional<IndexPair> witness;
  Distance witness_distance = 0;
  bool thin_signature() const { return !witness.has_value(); }
};

/// (c(x), c(y)) in exp E_r. Every p other than x and y covers itself, so
/// X \ {x} lies in E_r[X \ {y}] iff y has another point within r, and
/// symmetrically for x. `ball_sizes[p]` is |E_r[p]|.
inline bool c_images_related(const std::vector<std::size_t>& ball_sizes, Index x, Index y) {
  return x == y || (ball_sizes[x] >= 2 && ball_sizes[y] >= 2);
}

/// Window search for an effective-properness failure of c at scale r.
inline CMapWindowReport c_map_check(const WindowSpace& w, Distance r, Distance separation, Distance excision) {
  if (separation <= r) throw InputError("c_map_check: separation must exceed the scale");
  std::vector<std::size_t> ball_sizes(w.size());
  for (Index p = 0; p < w.size(); ++p) ball_sizes[p] = w.ball(p, r).count();
  CMapWindowReport out;
  out.scale = r;
  out.separation = separation;
  out.excision = excision;
  for (Index x = 0; x < w.size() && !out.witness; ++x) {
    if (w.radius(x) <= excision) continue;
    for (Index y = x + 1; y < w.size(); ++y) {
      if (w.radius(y) <= excision || w.distance(x, y) <= separation) continue;
      if (c_images_related(ball_sizes, x, y)) {
        out.witness = IndexPair{x, y};
        out.witness_distance = w.distance(x, y);
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Family reports

struct HyperFamilySummary {
  Selector selector = Selector::kAll;
  std::size_t members = 0;
  std::size_t components = 0;
  bool connected = false;
  bool reclosure_enlarged = false;
};

inline HyperFamilySummary summarize(const HyperSpace& h) {
  return HyperFamilySummary{h.points.selector(), h.points.size(), h.space.classes().size(), is_connected(h.space),
                            h.reclosure_enlarged};
}

struct HyperFamilyReport {
  HyperFamilySummary large;
  HyperFamilySummary flat;
  bool base_connected = false;
};

inline HyperFamilyReport hyper_family_reports(const CoarseSpace& base) {
  HyperFamilyReport r;
  r.large = summarize(hyper_coarse(base, Selector::kLarge));
  r.flat = summarize(hyper_coarse(base, Selector::kFlat));
  r.base_connected = is_connected(base);
  return r;
}

/// Two structures on one ground with equal bornologies: compares the induced
/// bornologies of their FLAT hyperspaces.
inline bool flat_bornologies_agree(const CoarseSpace& c1, const CoarseSpace& c2) {
  require_same_ground(c1.ground(), c2.ground(), "flat_bornologies_agree");
  if (!(induced_bornology(c1) == induced_bornology(c2)))
    throw InputError("flat_bornologies_agree: the base bornologies differ");
  const HyperSpace h1 = hyper_coarse(c1, Selector::kFlat);
  const HyperSpace h2 = hyper_coarse(c2, Selector::kFlat);
  return h1.points.family() == h2.points.family() && induced_bornology(h1.space) == induced_bornology(h2.space);
}

// ---------------------------------------------------------------------------
// Window hyperspaces: metric versus satellite structure

enum class WindowStructure { kMetric, kSatellite };

/// E[S] for E_s (metric) or diag u ball(s)^2 (satellite).
inline PointSet window_closure(const WindowSpace& w, WindowStructure kind, Distance s, const PointSet& set) {
  if (kind == WindowStructure::kMetric) return w.thicken(set, s);
  const PointSet ball = w.ball_at_origin(s);
  return set.intersects(ball) ? set | ball : set;
}

inline bool window_exp_related(const WindowSpace& w, WindowStructure kind, Distance s, const PointSet& a,
                               const PointSet& b) {
  return a.is_subset_of(window_closure(w, kind, s, b)) && b.is_subset_of(window_closure(w, kind, s, a));
}

/// Least s in [0, H] with (B, {origin}) in exp of the chosen structure at s:
/// the radius of B in the hyperspace, measured from {origin}. nullopt when
/// no s up to the horizon relates them.
inline std::optional<Distance> flat_radius(const WindowSpace& w, WindowStructure kind, const PointSet& b) {
  const PointSet origin(w.ground(), {w.origin()});
  Distance lo = 0, hi = w.horizon();
  if (!window_exp_related(w, kind, hi, b, origin)) return std::nullopt;
  while (lo < hi) {
    const Distance mid = lo + (hi - lo) / 2;
    if (window_exp_related(w, kind, mid, b, origin))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace coarse
