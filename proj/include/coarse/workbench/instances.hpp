#pragma once

// Instance builders for the named example families.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coarse/coarse_space.hpp"
#include "coarse/window.hpp"

namespace coarse::workbench {

enum class InstanceKind {
  kFiniteRelational,
  kIntegerInterval,
  kIntegerGrid,
  kGroupWindow,
  kSquares,
  kSquaresShiftedUnion,
  kExplicitMetric,
};

inline const char* kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::kFiniteRelational: return "finite_relational";
    case InstanceKind::kIntegerInterval: return "integer_interval";
    case InstanceKind::kIntegerGrid: return "integer_grid";
    case InstanceKind::kGroupWindow: return "group_window";
    case InstanceKind::kSquares: return "squares";
    case InstanceKind::kSquaresShiftedUnion: return "squares_shifted_union";
    case InstanceKind::kExplicitMetric: return "explicit_metric";
  }
  return "finite_relational";
}

inline std::optional<InstanceKind> parse_kind(const std::string& s) {
  for (auto k : {InstanceKind::kFiniteRelational, InstanceKind::kIntegerInterval, InstanceKind::kIntegerGrid,
                 InstanceKind::kGroupWindow, InstanceKind::kSquares, InstanceKind::kSquaresShiftedUnion,
                 InstanceKind::kExplicitMetric})
    if (s == kind_name(k)) return k;
  return std::nullopt;
}

inline constexpr std::size_t kMaxInstancePoints = WindowSpace::kMaxPoints;

struct InstanceSpec {
  InstanceKind kind = InstanceKind::kFiniteRelational;
  /// Point count (finite_relational) or window extent N (the others).
  std::int64_t extent = 0;
  /// finite_relational: generator pairs.
  std::vector<std::pair<Index, Index>> generators;
  /// explicit_metric: row-major table and origin.
  std::vector<Distance> metric_table;
  Index origin = 0;
  std::vector<std::string> labels;
  /// Window grids; defaults are filled in by build().
  std::optional<Distance> horizon;
  std::vector<Distance> scales;
  std::vector<Distance> exclusion_grid;
  /// When set, a window kind is turned into the finite coarse space generated by E_r.
  std::optional<Distance> generator_radius;
};

using Instance = std::variant<CoarseSpace, WindowSpace>;

inline std::vector<Distance> default_scales() { return {1, 2, 3, 5, 8, 13}; }

inline std::vector<Distance> unit_grid(Distance horizon) {
  std::vector<Distance> g;
  g.reserve(static_cast<std::size_t>(horizon) + 1);
  for (Distance r = 0; r <= horizon; ++r) g.push_back(r);
  return g;
}

inline bool is_perfect_square(std::int64_t v) {
  if (v < 0) return false;
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s * s == v;
}

/// Window over the given 1-D integer points, origin at the point 0 (which must be present).
inline WindowSpace line_window(const std::vector<std::int64_t>& coords, Distance horizon, std::vector<Distance> scales,
                               std::vector<Distance> grid) {
  if (coords.size() > kMaxInstancePoints) throw CapacityError("window exceeds the instance capacity");
  Index origin = coords.size();
  for (Index i = 0; i < coords.size(); ++i)
    if (coords[i] == 0) origin = i;
  if (origin == coords.size()) throw InputError("line window lacks the point 0");
  std::vector<std::string> labels;
  labels.reserve(coords.size());
  for (auto c : coords) labels.push_back(std::to_string(c));
  auto ground = make_ground(coords.size(), std::move(labels), Metric(LatticePoints{1, coords}), origin);
  return WindowSpace(std::move(ground), horizon, std::move(scales), std::move(grid));
}

/// 1-D coordinate of each point of a line window.
inline std::int64_t coordinate(const WindowSpace& w, Index p) {
  const auto* lat = w.ground()->metric().lattice();
  if (!lat || lat->dimension != 1) throw StructuralError("coordinate: not a one-dimensional lattice window");
  return lat->coords[p];
}

/// Points of a line window whose coordinate is a perfect square.
inline PointSet squares_in(const WindowSpace& w) {
  PointSet s(w.ground());
  for (Index p = 0; p < w.size(); ++p)
    if (is_perfect_square(coordinate(w, p))) s.insert(p);
  return s;
}

/// Points with coordinate n^2 or n^2 + 1.
inline PointSet squares_shifted_union_in(const WindowSpace& w) {
  PointSet s(w.ground());
  for (Index p = 0; p < w.size(); ++p) {
    const auto c = coordinate(w, p);
    if (is_perfect_square(c) || is_perfect_square(c - 1)) s.insert(p);
  }
  return s;
}

inline WindowSpace integer_interval(std::int64_t n, std::vector<Distance> scales = default_scales(),
                                    std::vector<Distance> grid = {}) {
  if (n < 0) throw InputError("integer_interval: negative extent");
  std::vector<std::int64_t> coords;
  for (std::int64_t v = 0; v <= n; ++v) coords.push_back(v);
  if (grid.empty()) grid = unit_grid(n);
  return line_window(coords, n, std::move(scales), std::move(grid));
}

/// {n^2 | n^2 <= N} with the usual metric.
inline WindowSpace squares_window(std::int64_t n, std::vector<Distance> scales = default_scales(),
                                  std::vector<Distance> grid = {}) {
  std::vector<std::int64_t> coords;
  for (std::int64_t k = 0; k * k <= n; ++k) coords.push_back(k * k);
  if (grid.empty()) grid = unit_grid(n);
  return line_window(coords, n, std::move(scales), std::move(grid));
}

/// {n^2, n^2 + 1 | <= N}.
inline WindowSpace squares_shifted_union_window(std::int64_t n, std::vector<Distance> scales = default_scales(),
                                                std::vector<Distance> grid = {}) {
  std::vector<std::int64_t> coords;
  for (std::int64_t k = 0; k * k <= n; ++k) {
    const std::int64_t sq = k * k;
    if (coords.empty() || coords.back() < sq) coords.push_back(sq);
    if (sq + 1 <= n && !is_perfect_square(sq + 1)) coords.push_back(sq + 1);
  }
  if (grid.empty()) grid = unit_grid(n);
  return line_window(coords, n, std::move(scales), std::move(grid));
}

/// [-N, N]^2 with the L1 metric, origin at (0, 0).
inline WindowSpace integer_grid(std::int64_t n, std::vector<Distance> scales = default_scales(),
                                std::vector<Distance> grid = {}) {
  if (n < 0) throw InputError("integer_grid: negative extent");
  const std::int64_t side = 2 * n + 1;
  if (static_cast<std::size_t>(side * side) > kMaxInstancePoints) throw CapacityError("integer_grid exceeds capacity");
  LatticePoints pts{2, {}};
  std::vector<std::string> labels;
  Index origin = 0;
  for (std::int64_t x = -n; x <= n; ++x)
    for (std::int64_t y = -n; y <= n; ++y) {
      if (x == 0 && y == 0) origin = pts.coords.size() / 2;
      pts.coords.push_back(x);
      pts.coords.push_back(y);
      labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  if (grid.empty()) grid = unit_grid(2 * n);
  const std::size_t count = labels.size();
  auto ground = make_ground(count, std::move(labels), Metric(std::move(pts)), origin);
  return WindowSpace(std::move(ground), 2 * n, std::move(scales), std::move(grid));
}

/// The additive group of integers on the window [-N, N], origin 0.
inline WindowSpace group_window(std::int64_t n, std::vector<Distance> scales = default_scales(),
                                std::vector<Distance> grid = {}) {
  if (n < 0) throw InputError("group_window: negative extent");
  std::vector<std::int64_t> coords;
  for (std::int64_t v = -n; v <= n; ++v) coords.push_back(v);
  if (grid.empty()) grid = unit_grid(n);
  return line_window(coords, n, std::move(scales), std::move(grid));
}

/// Finite coarse space on the window ground generated by E_r.
inline CoarseSpace window_coarse(const WindowSpace& w, Distance r) { return generate(w.ground(), {entourage_at(w, r)}); }

// ---------------------------------------------------------------------------
// Group windows: left largeness against the right coarse structure.

/// K + L by group translation, clipped to the window (K = the ball of radius k at 0).
inline PointSet translate_cover(const WindowSpace& w, const PointSet& l, std::int64_t k) {
  require_same_ground(w.ground(), l.ground(), "translate_cover");
  const std::int64_t low = coordinate(w, 0);
  PointSet out(w.ground());
  l.bits().for_each([&](Index p) {
    const std::int64_t base = coordinate(w, p);
    for (std::int64_t shift = -k; shift <= k; ++shift) {
      const std::int64_t v = base + shift - low;
      if (v >= 0 && static_cast<std::size_t>(v) < w.size()) out.insert(static_cast<Index>(v));
    }
  });
  return out;
}

/// Right-structure entourage of the finite set K: {(x, y) | x - y in K}.
inline Entourage right_entourage(const WindowSpace& w, std::int64_t k) {
  Entourage e(w.ground());
  for (Index x = 0; x < w.size(); ++x)
    for (Index y = 0; y < w.size(); ++y) {
      const std::int64_t diff = coordinate(w, x) - coordinate(w, y);
      if (diff >= -k && diff <= k) e.insert(x, y);
    }
  return e;
}

/// Left large at scale k: the core of the window lies in K + L.
inline bool left_large_at(const WindowSpace& w, const PointSet& l, std::int64_t k) {
  return w.core(k).is_subset_of(translate_cover(w, l, k));
}

/// Large at scale k in the right coarse structure: the core lies in E_K[L].
inline bool right_structure_large_at(const WindowSpace& w, const PointSet& l, std::int64_t k) {
  return w.core(k).is_subset_of(closure(right_entourage(w, k), l));
}

// ---------------------------------------------------------------------------

inline Instance build(const InstanceSpec& spec) {
  auto scales = spec.scales.empty() ? default_scales() : spec.scales;
  auto finish = [&](WindowSpace w) -> Instance {
    if (spec.generator_radius) return window_coarse(w, *spec.generator_radius);
    return w;
  };
  switch (spec.kind) {
    case InstanceKind::kFiniteRelational: {
      if (spec.extent < 0) throw InputError("finite_relational: negative size");
      const auto n = static_cast<std::size_t>(spec.extent);
      if (n > kMaxInstancePoints) throw CapacityError("finite_relational exceeds the instance capacity");
      auto ground = spec.labels.empty() ? make_ground(n) : make_ground(n, spec.labels);
      return generate(ground, {Entourage(ground, spec.generators)});
    }
    case InstanceKind::kIntegerInterval: return finish(integer_interval(spec.extent, scales, spec.exclusion_grid));
    case InstanceKind::kIntegerGrid: return finish(integer_grid(spec.extent, scales, spec.exclusion_grid));
    case InstanceKind::kGroupWindow: return finish(group_window(spec.extent, scales, spec.exclusion_grid));
    case InstanceKind::kSquares: return finish(squares_window(spec.extent, scales, spec.exclusion_grid));
    case InstanceKind::kSquaresShiftedUnion:
      return finish(squares_shifted_union_window(spec.extent, scales, spec.exclusion_grid));
    case InstanceKind::kExplicitMetric: {
      std::size_t n = 0;
      while (n * n < spec.metric_table.size()) ++n;
      if (n * n != spec.metric_table.size()) throw InputError("explicit_metric: table is not square");
      auto ground = make_ground(n, spec.labels, Metric(DistanceTable{n, spec.metric_table}), spec.origin);
      Distance horizon = 0;
      for (Index p = 0; p < n; ++p) horizon = std::max(horizon, ground->distance(spec.origin, p));
      if (spec.horizon) horizon = *spec.horizon;
      auto grid = spec.exclusion_grid.empty() ? unit_grid(horizon) : spec.exclusion_grid;
      return finish(WindowSpace(std::move(ground), horizon, scales, std::move(grid)));
    }
  }
  throw InputError("unknown instance kind");
}

}  // namespace coarse::workbench
