#pragma once

// Finite metric windows standing in for unbounded metric spaces.
//
// A window is a ground set with an integer metric, an origin and a horizon H
// (every point within H of the origin). E_r = {(x,y) | d(x,y) <= r}. Bounded
// excision sets are origin-centred balls ball(R) = {p | d(o,p) <= R}.
//
// Boundary policy: universal quantifiers range over the core region
// {p | d(o,p) <= H - r} for the active scale r; existential witnesses may use
// the whole window. An excision radius R is admissible only when R <= H/2, so
// that a verdict always leaves at least half of the window outside the
// excised ball. "No admissible grid radius suffices" is reported as
// std::nullopt and is not a statement about the infinite space.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coarse/relation.hpp"

namespace coarse {

class WindowSpace {
 public:
  static constexpr std::size_t kMaxPoints = std::size_t{1} << 16;
  /// Largest window whose full E_r bit matrix may be materialized.
  static constexpr std::size_t kMaxMaterialized = 4096;

  WindowSpace(GroundPtr ground, Distance horizon, std::vector<Distance> scales, std::vector<Distance> exclusion_grid)
      : ground_(std::move(ground)),
        horizon_(horizon),
        scales_(std::move(scales)),
        exclusion_grid_(std::move(exclusion_grid)) {
    if (!ground_->has_metric()) throw InputError("window ground set has no metric");
    if (!ground_->origin()) throw InputError("window ground set has no origin");
    if (ground_->size() > kMaxPoints)
      throw CapacityError("window exceeds " + std::to_string(kMaxPoints) + " points");
    if (horizon_ < 0) throw InputError("negative horizon");
    auto strictly_ascending = [](const std::vector<Distance>& v) {
      return std::adjacent_find(v.begin(), v.end(), [](Distance a, Distance b) { return a >= b; }) == v.end();
    };
    if (!strictly_ascending(scales_) || (!scales_.empty() && scales_.front() < 0))
      throw InputError("scales must be non-negative and strictly ascending");
    if (exclusion_grid_.empty()) throw InputError("exclusion grid is empty");
    if (!strictly_ascending(exclusion_grid_) || exclusion_grid_.front() < 0 || exclusion_grid_.back() > horizon_)
      throw InputError("exclusion grid must be strictly ascending within [0, horizon]");
    const Index o = *ground_->origin();
    radius_.resize(ground_->size());
    for (Index p = 0; p < ground_->size(); ++p) {
      radius_[p] = ground_->distance(o, p);
      if (radius_[p] > horizon_) throw InputError("point " + std::to_string(p) + " lies beyond the horizon");
    }
  }

  const GroundPtr& ground() const { return ground_; }
  std::size_t size() const { return ground_->size(); }
  Index origin() const { return *ground_->origin(); }
  Distance horizon() const { return horizon_; }
  const std::vector<Distance>& scales() const { return scales_; }
  const std::vector<Distance>& exclusion_grid() const { return exclusion_grid_; }

  Distance distance(Index x, Index y) const { return ground_->distance(x, y); }
  /// Distance from the origin.
  Distance radius(Index p) const { return radius_[p]; }

  Distance admissible_limit() const { return horizon_ / 2; }
  bool admissible(Distance excision) const { return excision <= admissible_limit(); }

  bool has_scale(Distance r) const { return std::binary_search(scales_.begin(), scales_.end(), r); }
  void require_scale(Distance r, const char* what) const {
    if (!has_scale(r)) throw InputError(std::string(what) + ": scale " + std::to_string(r) + " is not on the scale grid");
  }

  /// {p | d(o,p) <= H - r}.
  PointSet core(Distance r) const {
    PointSet c(ground_);
    for (Index p = 0; p < size(); ++p)
      if (radius_[p] <= horizon_ - r) c.insert(p);
    return c;
  }

  /// {p | d(o,p) <= R}.
  PointSet ball_at_origin(Distance excision) const {
    PointSet b(ground_);
    for (Index p = 0; p < size(); ++p)
      if (radius_[p] <= excision) b.insert(p);
    return b;
  }

  /// E_r[x] within the window.
  BitSet ball(Index x, Distance r) const {
    BitSet b(size());
    for (Index p = 0; p < size(); ++p)
      if (distance(x, p) <= r) b.set(p);
    return b;
  }

  /// E_r[A] within the window.
  PointSet thicken(const PointSet& a, Distance r) const {
    require_same_ground(ground_, a.ground(), "thicken");
    BitSet out(size());
    for (Index p = 0; p < size(); ++p) {
      bool hit = false;
      a.bits().for_each([&](Index x) { hit = hit || distance(x, p) <= r; });
      if (hit) out.set(p);
    }
    return PointSet(ground_, std::move(out));
  }

  /// Least grid radius >= need that is admissible.
  std::optional<Distance> grid_radius_at_least(Distance need) const {
    auto it = std::lower_bound(exclusion_grid_.begin(), exclusion_grid_.end(), need);
    if (it == exclusion_grid_.end() || !admissible(*it)) return std::nullopt;
    return *it;
  }

 private:
  GroundPtr ground_;
  Distance horizon_;
  std::vector<Distance> scales_;
  std::vector<Distance> exclusion_grid_;
  std::vector<Distance> radius_;
};

inline std::vector<std::string> window_caveats() {
  return {
      "universal quantifiers range over the core region d(o,p) <= H - r",
      "excision radii above H/2 are inadmissible",
      "a null radius means no admissible grid radius suffices within this window; it is not a proof about the "
      "unbounded space",
  };
}

/// E_r as a relation on the window.
inline Entourage entourage_at(const WindowSpace& w, Distance r) {
  if (w.size() > WindowSpace::kMaxMaterialized)
    throw CapacityError("entourage_at: window exceeds " + std::to_string(WindowSpace::kMaxMaterialized) + " points");
  Entourage e(w.ground());
  for (Index x = 0; x < w.size(); ++x) e.row(x) = w.ball(x, r);
  return e;
}

struct ThinEntry {
  Distance scale = 0;
  std::optional<Distance> radius;
  /// Colliding pair with the farthest nearer point, if any collision exists.
  std::optional<std::pair<Index, Index>> farthest_collision;
  /// Distance from the origin that an excision must cover.
  Distance required = 0;
};

struct ThinProfile {
  std::vector<ThinEntry> entries;

  bool all_finite() const {
    return std::all_of(entries.begin(), entries.end(), [](const ThinEntry& e) { return e.radius.has_value(); });
  }
  const ThinEntry* at(Distance r) const {
    for (const auto& e : entries)
      if (e.scale == r) return &e;
    return nullptr;
  }
};

/// Thin profile at a single scale: the least admissible R such that distinct
/// core points x, y of A beyond R never have intersecting E_r balls.
inline ThinEntry thin_entry(const WindowSpace& w, const PointSet& a, Distance r) {
  require_same_ground(w.ground(), a.ground(), "thin_profile");
  const auto pts = (a & w.core(r)).members();
  std::vector<BitSet> balls;
  balls.reserve(pts.size());
  for (Index x : pts) balls.push_back(w.ball(x, r));
  ThinEntry e;
  e.scale = r;
  bool collided = false;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!balls[i].intersects(balls[j])) continue;
      const Distance nearer = std::min(w.radius(pts[i]), w.radius(pts[j]));
      if (!collided || nearer > e.required) {
        e.required = nearer;
        e.farthest_collision = std::make_pair(pts[i], pts[j]);
      }
      collided = true;
    }
  e.radius = collided ? w.grid_radius_at_least(e.required) : w.grid_radius_at_least(w.exclusion_grid().front());
  return e;
}

inline ThinProfile thin_profile(const WindowSpace& w, const PointSet& a) {
  ThinProfile p;
  for (Distance r : w.scales()) p.entries.push_back(thin_entry(w, a, r));
  return p;
}

/// core(r) inside E_r[A].
inline bool large_at(const WindowSpace& w, const PointSet& a, Distance r) {
  w.require_scale(r, "large_at");
  return w.core(r).is_subset_of(w.thicken(a, r));
}

/// core inside E_s[core minus E_r[A]], with core taken at max(r, s).
inline bool small_at(const WindowSpace& w, const PointSet& a, Distance r, Distance s) {
  w.require_scale(r, "small_at");
  w.require_scale(s, "small_at");
  const PointSet core = w.core(std::max(r, s));
  const PointSet rest = core - w.thicken(a, r);
  bool ok = true;
  core.bits().for_each([&](Index p) {
    if (!ok) return;
    bool reached = false;
    rest.bits().for_each([&](Index q) { reached = reached || w.distance(p, q) <= s; });
    ok = reached;
  });
  return ok;
}

/// Some core point x has E_r[x] inside A.
inline bool thick_at(const WindowSpace& w, const PointSet& a, Distance r) {
  w.require_scale(r, "thick_at");
  require_same_ground(w.ground(), a.ground(), "thick_at");
  // E_r[x] contains x, so candidates lie in A.
  bool found = false;
  (a & w.core(r)).bits().for_each([&](Index x) { found = found || w.ball(x, r).is_subset_of(a.bits()); });
  return found;
}

struct SatelliteRow {
  Distance scale = 0;
  /// Per exclusion-grid radius: agreement, or nullopt when R is inadmissible.
  std::vector<std::optional<bool>> agrees;
  std::optional<Distance> least_agreeing;
};

/// Compares E_r on the core points of A with the satellite entourage
/// diag u ball(R)^2: agreement at (r, R) means every off-diagonal E_r pair
/// lies inside ball(R).
inline std::vector<SatelliteRow> satellite_profile(const WindowSpace& w, const PointSet& a) {
  require_same_ground(w.ground(), a.ground(), "satellite_profile");
  std::vector<SatelliteRow> rows;
  for (Distance r : w.scales()) {
    const auto pts = (a & w.core(r)).members();
    std::optional<Distance> need;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (w.distance(pts[i], pts[j]) <= r) {
          const Distance outer = std::max(w.radius(pts[i]), w.radius(pts[j]));
          need = need ? std::max(*need, outer) : outer;
        }
    SatelliteRow row;
    row.scale = r;
    for (Distance excision : w.exclusion_grid()) {
      if (!w.admissible(excision)) {
        row.agrees.emplace_back(std::nullopt);
        continue;
      }
      const bool ok = !need || excision >= *need;
      row.agrees.emplace_back(ok);
      if (ok && !row.least_agreeing) row.least_agreeing = excision;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct OscillationResult {
  std::optional<Distance> radius;
  /// Farthest core point where the oscillation exceeds epsilon.
  std::optional<Index> farthest_violation;
};

/// Least admissible grid R with diam f(E_r[x]) <= epsilon for every core
/// point x beyond ball(R). The target of f must carry a metric.
inline OscillationResult slowly_oscillating_check(const WindowSpace& w, const Map& f, double epsilon, Distance r) {
  require_same_ground(w.ground(), f.source(), "slowly_oscillating_check");
  const GroundSet& target = *f.target();
  if (!target.has_metric()) throw StructuralError("slowly_oscillating_check: target carries no metric");
  OscillationResult out;
  Distance need = 0;
  bool violated = false;
  w.core(r).bits().for_each([&](Index x) {
    std::vector<Index> values;
    w.ball(x, r).for_each([&](Index p) { values.push_back(f(p)); });
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Distance diam = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
      for (std::size_t j = i + 1; j < values.size(); ++j) diam = std::max(diam, target.distance(values[i], values[j]));
    if (static_cast<double>(diam) > epsilon && (!violated || w.radius(x) > need)) {
      need = w.radius(x);
      out.farthest_violation = x;
      violated = true;
    }
  });
  out.radius = violated ? w.grid_radius_at_least(need) : w.grid_radius_at_least(w.exclusion_grid().front());
  return out;
}

/// {0, 1} with d(0, 1) = 1.
inline GroundPtr two_point_space() {
  return make_ground(2, {"0", "1"}, Metric(LatticePoints{1, {0, 1}}), Index{0});
}

/// Indicator of A as a map into two_point_space().
inline Map indicator(const PointSet& a, const GroundPtr& two_points = two_point_space()) {
  std::vector<Index> t(a.ground()->size());
  for (Index p = 0; p < t.size(); ++p) t[p] = a.contains(p) ? 1 : 0;
  return Map(a.ground(), two_points, std::move(t));
}

/// A {0,1} function that fails to oscillate slowly at the scale of a thin
/// entry with a null radius: the indicator of one point of the farthest
/// colliding pair. That point's E_r ball also holds a point valued 0.
inline std::optional<Map> oscillation_witness(const WindowSpace& w, const ThinEntry& entry) {
  if (entry.radius || !entry.farthest_collision) return std::nullopt;
  PointSet marked(w.ground());
  marked.insert(entry.farthest_collision->first);
  return indicator(marked);
}

/// The window restricted to A (which must contain the origin).
inline WindowSpace subspace(const WindowSpace& w, const PointSet& a) {
  require_same_ground(w.ground(), a.ground(), "subspace");
  if (!a.contains(w.origin())) throw InputError("subspace: the subset must contain the origin");
  const auto pts = a.members();
  const std::size_t n = pts.size();
  std::optional<Metric> metric;
  if (const auto* lat = w.ground()->metric().lattice()) {
    LatticePoints sub{lat->dimension, {}};
    for (Index p : pts)
      for (std::size_t c = 0; c < lat->dimension; ++c) sub.coords.push_back(lat->coords[p * lat->dimension + c]);
    metric.emplace(std::move(sub));
  } else {
    DistanceTable t{n, std::vector<Distance>(n * n)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t.entries[i * n + j] = w.distance(pts[i], pts[j]);
    metric.emplace(std::move(t));
  }
  std::vector<std::string> labels;
  if (!w.ground()->labels().empty())
    for (Index p : pts) labels.push_back(w.ground()->label(p));
  const Index origin = static_cast<Index>(std::find(pts.begin(), pts.end(), w.origin()) - pts.begin());
  auto ground = make_ground(n, std::move(labels), std::move(metric), origin);
  return WindowSpace(std::move(ground), w.horizon(), w.scales(), w.exclusion_grid());
}

}  // namespace coarse
