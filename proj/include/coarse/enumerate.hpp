#pragma once

// Exhaustive and random instance generators for the brute-force checks.

#include <cstdint>
#include <random>
#include <vector>

#include "coarse/coarse_space.hpp"

namespace coarse {

/// All set partitions of {0..n-1} as restricted growth strings (class label
/// per point, labels appear in first-occurrence order). Bell(n) entries.
inline std::vector<std::vector<Index>> all_partitions(std::size_t n) {
  std::vector<std::vector<Index>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<Index> labels(n, 0), max_before(n, 0);
  for (;;) {
    out.push_back(labels);
    // Advance to the next restricted growth string.
    std::size_t i = n - 1;
    while (i > 0 && labels[i] == max_before[i] + 1) --i;
    if (i == 0) break;
    ++labels[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      max_before[j] = std::max(max_before[j - 1], labels[j - 1]);
      labels[j] = 0;
    }
  }
  return out;
}

/// Every coarse structure on an n-point set, one per emax partition.
inline std::vector<CoarseSpace> all_coarse_spaces(std::size_t n) {
  const GroundPtr ground = make_ground(n);
  std::vector<CoarseSpace> out;
  for (const auto& labels : all_partitions(n)) out.push_back(from_labels(ground, labels));
  return out;
}

/// Every subset of the ground, indexed by bitmask (n <= 20).
inline std::vector<PointSet> all_subsets(const GroundPtr& ground) {
  const std::size_t n = ground->size();
  if (n > 20) throw CapacityError("all_subsets: ground larger than 20 points");
  std::vector<PointSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    out.emplace_back(ground, BitSet::from_mask(n, mask));
  return out;
}

/// Seeded generator. Bounded draws use plain modulo on mt19937_64 output so
/// that sequences are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }
  bool coin(std::uint64_t num = 1, std::uint64_t den = 2) { return below(den) < num; }

  PointSet subset(const GroundPtr& ground, std::uint64_t num = 1, std::uint64_t den = 2) {
    PointSet s(ground);
    for (Index i = 0; i < ground->size(); ++i)
      if (coin(num, den)) s.insert(i);
    return s;
  }

  Entourage relation(const GroundPtr& ground, std::uint64_t num = 1, std::uint64_t den = 3) {
    Entourage e(ground);
    for (Index x = 0; x < ground->size(); ++x)
      for (Index y = 0; y < ground->size(); ++y)
        if (coin(num, den)) e.insert(x, y);
    return e;
  }

  /// Coarse space with a random partition drawn by random class labels.
  CoarseSpace space(const GroundPtr& ground) {
    const std::size_t n = ground->size();
    std::vector<Index> raw(n), labels(n);
    const std::uint64_t k = n == 0 ? 1 : 1 + below(n);
    for (auto& r : raw) r = below(k);
    std::vector<Index> relabel(n + 1, n);
    Index next = 0;
    for (Index x = 0; x < n; ++x) {
      if (relabel[raw[x]] == n) relabel[raw[x]] = next++;
      labels[x] = relabel[raw[x]];
    }
    return from_labels(ground, labels);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace coarse
