#pragma once

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coarse/bitset.hpp"
#include "coarse/errors.hpp"

namespace coarse {

using Distance = std::int64_t;

/// Sentinel for the extended metric value +infinity (Hausdorff distance
/// between an empty and a non-empty set).
inline constexpr Distance kInfiniteDistance = std::numeric_limits<Distance>::max();

/// Points of an integer lattice, measured with the L1 (word) metric.
struct LatticePoints {
  std::size_t dimension = 1;
  std::vector<std::int64_t> coords;  // row-major, `dimension` entries per point

  friend bool operator==(const LatticePoints&, const LatticePoints&) = default;
};

/// Explicit symmetric distance table, row-major.
struct DistanceTable {
  std::size_t size = 0;
  std::vector<Distance> entries;

  friend bool operator==(const DistanceTable&, const DistanceTable&) = default;
};

/// Integer (pseudo)metric on an indexed point universe.
class Metric {
 public:
  /// Tables larger than this are refused: the triangle inequality check is cubic.
  static constexpr std::size_t kMaxTableSize = 1024;

  explicit Metric(LatticePoints points) : repr_(std::move(points)) {
    const auto& p = std::get<LatticePoints>(repr_);
    if (p.dimension == 0) throw InputError("lattice dimension must be positive");
    if (p.coords.size() % p.dimension != 0)
      throw InputError("lattice coordinate count is not a multiple of the dimension");
  }

  explicit Metric(DistanceTable table) : repr_(std::move(table)) { validate_table(); }

  std::size_t size() const {
    if (const auto* p = std::get_if<LatticePoints>(&repr_)) return p->coords.size() / p->dimension;
    return std::get<DistanceTable>(repr_).size;
  }

  Distance operator()(Index x, Index y) const {
    if (const auto* p = std::get_if<LatticePoints>(&repr_)) {
      Distance d = 0;
      const std::size_t k = p->dimension;
      for (std::size_t c = 0; c < k; ++c) d += std::llabs(p->coords[x * k + c] - p->coords[y * k + c]);
      return d;
    }
    const auto& t = std::get<DistanceTable>(repr_);
    return t.entries[x * t.size + y];
  }

  const LatticePoints* lattice() const { return std::get_if<LatticePoints>(&repr_); }
  const DistanceTable* table() const { return std::get_if<DistanceTable>(&repr_); }

  friend bool operator==(const Metric&, const Metric&) = default;

 private:
  void validate_table() const {
    const auto& t = std::get<DistanceTable>(repr_);
    const std::size_t n = t.size;
    if (n > kMaxTableSize) throw CapacityError("distance table exceeds " + std::to_string(kMaxTableSize) + " points");
    if (t.entries.size() != n * n) throw InputError("distance table is not square");
    for (std::size_t x = 0; x < n; ++x) {
      if (t.entries[x * n + x] != 0) throw InputError("distance table has a non-zero diagonal");
      for (std::size_t y = 0; y < n; ++y) {
        const Distance d = t.entries[x * n + y];
        if (d < 0) throw InputError("distance table has a negative entry");
        if (d != t.entries[y * n + x]) throw InputError("distance table is not symmetric");
      }
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (t.entries[x * n + z] > t.entries[x * n + y] + t.entries[y * n + z])
            throw InputError("distance table violates the triangle inequality");
  }

  std::variant<LatticePoints, DistanceTable> repr_;
};

/// Indexed finite point universe, optionally carrying a metric and an origin.
class GroundSet {
 public:
  explicit GroundSet(std::size_t size) : size_(size) {}

  GroundSet(std::size_t size, std::vector<std::string> labels, std::optional<Metric> metric = std::nullopt,
            std::optional<Index> origin = std::nullopt)
      : size_(size), labels_(std::move(labels)), metric_(std::move(metric)), origin_(origin) {
    if (!labels_.empty() && labels_.size() != size_) throw InputError("label count does not match ground size");
    if (metric_ && metric_->size() != size_) throw InputError("metric size does not match ground size");
    if (origin_ && *origin_ >= size_) throw InputError("origin index out of range");
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Index i) const { return labels_.empty() ? std::to_string(i) : labels_[i]; }

  bool has_metric() const { return metric_.has_value(); }
  const Metric& metric() const {
    if (!metric_) throw StructuralError("ground set carries no metric");
    return *metric_;
  }
  std::optional<Index> origin() const { return origin_; }

  Distance distance(Index x, Index y) const { return metric()(x, y); }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::string> labels_;
  std::optional<Metric> metric_;
  std::optional<Index> origin_;
};

using GroundPtr = std::shared_ptr<const GroundSet>;

inline GroundPtr make_ground(std::size_t size) { return std::make_shared<const GroundSet>(size); }

inline GroundPtr make_ground(std::size_t size, std::vector<std::string> labels, std::optional<Metric> metric = std::nullopt,
                             std::optional<Index> origin = std::nullopt) {
  return std::make_shared<const GroundSet>(size, std::move(labels), std::move(metric), origin);
}

/// Ground sets match when they are the same object or structurally equal.
inline bool same_ground(const GroundPtr& a, const GroundPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->size() == b->size() && *a == *b;
}

inline void require_same_ground(const GroundPtr& a, const GroundPtr& b, const char* what) {
  if (!same_ground(a, b)) throw StructuralError(std::string(what) + ": ground-set mismatch");
}

}  // namespace coarse
