#pragma once

// Maps between finite coarse spaces.
//
// Every test reduces to emax: f is bornologous iff (f x f)(emax_X) lies in
// emax_Y, and effectively proper iff (f^-1 x f^-1)(emax_Y) lies in emax_X.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coarse/coarse_space.hpp"

namespace coarse {

using IndexPair = std::pair<Index, Index>;

namespace detail {

inline std::optional<IndexPair> first_pair_outside(const Entourage& e, const Entourage& bound) {
  for (Index x = 0; x < e.ground_size(); ++x) {
    const BitSet extra = e.row(x) - bound.row(x);
    if (extra.any()) return IndexPair{x, extra.first()};
  }
  return std::nullopt;
}

inline void require_map_spaces(const Map& f, const CoarseSpace& cx, const CoarseSpace& cy, const char* what) {
  require_same_ground(f.source(), cx.ground(), what);
  require_same_ground(f.target(), cy.ground(), what);
}

}  // namespace detail

/// A source pair (x, y) in emax_X whose image leaves emax_Y, if any.
inline std::optional<IndexPair> bornologous_violation(const Map& f, const CoarseSpace& cx, const CoarseSpace& cy) {
  detail::require_map_spaces(f, cx, cy, "is_bornologous");
  for (const auto& [x, y] : cx.emax().pairs())
    if (!cy.emax().contains(f(x), f(y))) return IndexPair{x, y};
  return std::nullopt;
}

inline bool is_bornologous(const Map& f, const CoarseSpace& cx, const CoarseSpace& cy) {
  detail::require_map_spaces(f, cx, cy, "is_bornologous");
  return is_subset(push(f, cx.emax()), cy.emax());
}

/// Preimage of every maximal bounded target set is bounded.
inline bool is_proper(const Map& f, const Bornology& bx, const Bornology& by) {
  require_same_ground(f.source(), bx.ground(), "is_proper");
  require_same_ground(f.target(), by.ground(), "is_proper");
  for (const auto& m : by.maximal())
    if (!bx.is_bounded(f.preimage(m))) return false;
  return true;
}

inline bool is_proper(const Map& f, const CoarseSpace& cx, const CoarseSpace& cy) {
  return is_proper(f, induced_bornology(cx), induced_bornology(cy));
}

/// A source pair (x, y) with f(x) ~ f(y) but x, y in different classes, if any.
inline std::optional<IndexPair> effective_properness_violation(const Map& f, const CoarseSpace& cx,
                                                               const CoarseSpace& cy) {
  detail::require_map_spaces(f, cx, cy, "is_effectively_proper");
  return detail::first_pair_outside(pull(f, cy.emax()), cx.emax());
}

inline bool is_effectively_proper(const Map& f, const CoarseSpace& cx, const CoarseSpace& cy) {
  return !effective_properness_violation(f, cx, cy).has_value();
}

inline bool is_coarsely_surjective(const Map& f, const CoarseSpace& cy) {
  require_same_ground(f.target(), cy.ground(), "is_coarsely_surjective");
  return closure(cy.emax(), f.image()).size() == cy.size();
}

/// The pairing {(f(x), g(x))} lies in emax_Y.
inline bool bornotopic(const Map& f, const Map& g, const CoarseSpace& cy) {
  require_same_ground(f.source(), g.source(), "bornotopic");
  require_same_ground(f.target(), cy.ground(), "bornotopic");
  require_same_ground(g.target(), cy.ground(), "bornotopic");
  for (Index x = 0; x < f.table().size(); ++x)
    if (!cy.emax().contains(f(x), g(x))) return false;
  return true;
}

/// Bijective, bornologous and effectively proper.
inline bool is_asymorphism(const Map& f, const CoarseSpace& cx, const CoarseSpace& cy) {
  detail::require_map_spaces(f, cx, cy, "is_asymorphism");
  if (!f.is_bijective()) return false;
  const bool direct = is_bornologous(f, cx, cy) && is_effectively_proper(f, cx, cy);
  const bool via_inverse = is_bornologous(f, cx, cy) && is_bornologous(f.inverse(), cy, cx);
  if (direct != via_inverse) throw std::logic_error("is_asymorphism: inverse route disagrees with direct route");
  return direct;
}

/// Injective, and an asymorphism onto its image with the subspace structure.
inline bool is_asymorphic_embedding(const Map& f, const CoarseSpace& cx, const CoarseSpace& cy) {
  detail::require_map_spaces(f, cx, cy, "is_asymorphic_embedding");
  return f.is_injective() && is_bornologous(f, cx, cy) && is_effectively_proper(f, cx, cy);
}

/// For each y, the least x with (f(x), y) in emax_Y; nullopt unless f is
/// effectively proper and coarsely surjective. The result is verified to be a
/// two-sided bornotopy inverse before it is returned.
inline std::optional<Map> bornotopy_inverse(const Map& f, const CoarseSpace& cx, const CoarseSpace& cy) {
  detail::require_map_spaces(f, cx, cy, "bornotopy_inverse");
  if (!is_effectively_proper(f, cx, cy) || !is_coarsely_surjective(f, cy)) return std::nullopt;
  std::vector<Index> table(cy.size());
  for (Index y = 0; y < cy.size(); ++y) {
    Index chosen = cx.size();
    for (Index x = 0; x < cx.size() && chosen == cx.size(); ++x)
      if (cy.emax().contains(f(x), y)) chosen = x;
    table[y] = chosen;
  }
  Map g(cy.ground(), cx.ground(), std::move(table));
  if (!bornotopic(then(f, g), Map::identity(cx.ground()), cx) || !bornotopic(then(g, f), Map::identity(cy.ground()), cy))
    throw std::logic_error("bornotopy_inverse: constructed map fails the bornotopy check");
  return g;
}

struct MapFlags {
  bool bornologous = false;
  bool proper = false;
  bool effectively_proper = false;
  bool coarsely_surjective = false;
  bool asymorphism = false;
  bool coarse_equivalence = false;

  friend bool operator==(const MapFlags&, const MapFlags&) = default;
};

struct MapWitnesses {
  std::optional<IndexPair> bornologous;          // source pair whose image is uncontrolled
  std::optional<PointSet> proper;                // maximal bounded target set with unbounded preimage
  std::optional<IndexPair> effectively_proper;   // source pair glued by f across classes
  std::optional<PointSet> coarsely_surjective;   // target class missed by the image
};

struct MapReport {
  MapFlags flags;
  MapWitnesses witnesses;
  std::optional<Map> inverse;
};

inline MapReport analyze_map(const Map& f, const CoarseSpace& cx, const CoarseSpace& cy) {
  detail::require_map_spaces(f, cx, cy, "analyze_map");
  MapReport r;
  auto& fl = r.flags;
  auto& w = r.witnesses;
  w.bornologous = bornologous_violation(f, cx, cy);
  fl.bornologous = !w.bornologous;

  const Bornology bx = induced_bornology(cx), by = induced_bornology(cy);
  for (const auto& m : by.maximal())
    if (!bx.is_bounded(f.preimage(m))) {
      w.proper = m;
      break;
    }
  fl.proper = !w.proper;

  w.effectively_proper = effective_properness_violation(f, cx, cy);
  fl.effectively_proper = !w.effectively_proper;

  const PointSet image = f.image();
  for (const auto& k : cy.classes())
    if (!k.intersects(image)) {
      w.coarsely_surjective = k;
      break;
    }
  fl.coarsely_surjective = !w.coarsely_surjective;

  fl.asymorphism = is_asymorphism(f, cx, cy);
  fl.coarse_equivalence = fl.bornologous && fl.effectively_proper && fl.coarsely_surjective;
  if (fl.coarse_equivalence) r.inverse = bornotopy_inverse(f, cx, cy);
  return r;
}

inline bool is_coarse_equivalence(const Map& f, const CoarseSpace& cx, const CoarseSpace& cy) {
  return is_bornologous(f, cx, cy) && is_effectively_proper(f, cx, cy) && is_coarsely_surjective(f, cy);
}

}  // namespace coarse
