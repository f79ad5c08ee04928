#pragma once

// Relation algebra on finite ground sets.
//
// An Entourage is stored as a dense bit matrix: row x holds E[x] = {y | (x,y) in E}.
// Composition applies the right operand first:
//   (x,z) in compose(E, F)  iff  exists y with (x,y) in F and (y,z) in E.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "coarse/bitset.hpp"
#include "coarse/errors.hpp"
#include "coarse/ground_set.hpp"

namespace coarse {

/// Subset of a ground set.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(GroundPtr ground) : ground_(std::move(ground)), bits_(ground_->size()) {}
  PointSet(GroundPtr ground, BitSet bits) : ground_(std::move(ground)), bits_(std::move(bits)) {
    if (bits_.size() != ground_->size()) throw StructuralError("point set length does not match its ground set");
  }
  PointSet(GroundPtr ground, std::initializer_list<Index> members) : PointSet(std::move(ground)) {
    for (Index i : members) insert(i);
  }
  PointSet(GroundPtr ground, const std::vector<Index>& members) : PointSet(std::move(ground)) {
    for (Index i : members) insert(i);
  }

  static PointSet all(GroundPtr ground) {
    const std::size_t n = ground->size();
    return PointSet(std::move(ground), BitSet(n, true));
  }

  const GroundPtr& ground() const { return ground_; }
  const BitSet& bits() const { return bits_; }
  BitSet& bits() { return bits_; }

  bool contains(Index i) const { return i < bits_.size() && bits_.test(i); }
  void insert(Index i) {
    if (i >= bits_.size()) throw StructuralError("point index " + std::to_string(i) + " out of range");
    bits_.set(i);
  }
  void erase(Index i) {
    if (i < bits_.size()) bits_.reset(i);
  }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  std::vector<Index> members() const { return bits_.to_vector(); }

  PointSet complement() const { return PointSet(ground_, ~bits_); }

  bool is_subset_of(const PointSet& o) const {
    require_same_ground(ground_, o.ground_, "is_subset_of");
    return bits_.is_subset_of(o.bits_);
  }
  bool intersects(const PointSet& o) const {
    require_same_ground(ground_, o.ground_, "intersects");
    return bits_.intersects(o.bits_);
  }

  PointSet& operator|=(const PointSet& o) {
    require_same_ground(ground_, o.ground_, "union");
    bits_ |= o.bits_;
    return *this;
  }
  PointSet& operator&=(const PointSet& o) {
    require_same_ground(ground_, o.ground_, "intersection");
    bits_ &= o.bits_;
    return *this;
  }
  PointSet& operator-=(const PointSet& o) {
    require_same_ground(ground_, o.ground_, "difference");
    bits_ -= o.bits_;
    return *this;
  }
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return same_ground(a.ground_, b.ground_) && a.bits_ == b.bits_;
  }
  friend auto operator<=>(const PointSet& a, const PointSet& b) { return a.bits_ <=> b.bits_; }

 private:
  GroundPtr ground_;
  BitSet bits_;
};

/// Binary relation on a ground set.
class Entourage {
 public:
  Entourage() = default;
  explicit Entourage(GroundPtr ground) : ground_(std::move(ground)), rows_(ground_->size(), BitSet(ground_->size())) {}
  Entourage(GroundPtr ground, std::initializer_list<std::pair<Index, Index>> pairs) : Entourage(std::move(ground)) {
    for (auto [x, y] : pairs) insert(x, y);
  }
  Entourage(GroundPtr ground, const std::vector<std::pair<Index, Index>>& pairs) : Entourage(std::move(ground)) {
    for (auto [x, y] : pairs) insert(x, y);
  }

  const GroundPtr& ground() const { return ground_; }
  std::size_t ground_size() const { return rows_.size(); }

  bool contains(Index x, Index y) const { return x < rows_.size() && y < rows_.size() && rows_[x].test(y); }
  void insert(Index x, Index y) {
    if (x >= rows_.size() || y >= rows_.size())
      throw StructuralError("pair (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
    rows_[x].set(y);
  }
  void erase(Index x, Index y) {
    if (x < rows_.size() && y < rows_.size()) rows_[x].reset(y);
  }

  /// E[x] as a bitset over the ground.
  const BitSet& row(Index x) const { return rows_[x]; }
  BitSet& row(Index x) { return rows_[x]; }
  /// E[x] as a PointSet.
  PointSet ball(Index x) const { return PointSet(ground_, rows_[x]); }

  std::size_t pair_count() const {
    std::size_t c = 0;
    for (const auto& r : rows_) c += r.count();
    return c;
  }
  bool empty() const { return pair_count() == 0; }

  /// Pairs in lexicographic order.
  std::vector<std::pair<Index, Index>> pairs() const {
    std::vector<std::pair<Index, Index>> out;
    for (Index x = 0; x < rows_.size(); ++x) rows_[x].for_each([&](Index y) { out.emplace_back(x, y); });
    return out;
  }

  friend bool operator==(const Entourage& a, const Entourage& b) {
    return same_ground(a.ground_, b.ground_) && a.rows_ == b.rows_;
  }

 private:
  GroundPtr ground_;
  std::vector<BitSet> rows_;
};

/// Total function between two ground sets.
class Map {
 public:
  Map() = default;
  Map(GroundPtr source, GroundPtr target, std::vector<Index> table)
      : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
    if (table_.size() != source_->size())
      throw InputError("map table has " + std::to_string(table_.size()) + " entries for a source of size " +
                       std::to_string(source_->size()) + " (map not total)");
    for (Index v : table_)
      if (v >= target_->size()) throw InputError("map value " + std::to_string(v) + " outside the target");
  }

  static Map identity(const GroundPtr& ground) {
    std::vector<Index> t(ground->size());
    for (Index i = 0; i < t.size(); ++i) t[i] = i;
    return Map(ground, ground, std::move(t));
  }

  const GroundPtr& source() const { return source_; }
  const GroundPtr& target() const { return target_; }
  const std::vector<Index>& table() const { return table_; }
  Index operator()(Index x) const { return table_[x]; }

  PointSet image(const PointSet& a) const {
    require_same_ground(source_, a.ground(), "image");
    PointSet out(target_);
    a.bits().for_each([&](Index x) { out.insert(table_[x]); });
    return out;
  }
  PointSet image() const { return image(PointSet::all(source_)); }
  PointSet preimage(const PointSet& b) const {
    require_same_ground(target_, b.ground(), "preimage");
    PointSet out(source_);
    for (Index x = 0; x < table_.size(); ++x)
      if (b.contains(table_[x])) out.insert(x);
    return out;
  }

  bool is_injective() const {
    BitSet seen(target_->size());
    for (Index v : table_) {
      if (seen.test(v)) return false;
      seen.set(v);
    }
    return true;
  }
  bool is_surjective() const { return image().size() == target_->size(); }
  bool is_bijective() const { return is_injective() && is_surjective(); }

  /// Set-theoretic inverse of a bijection.
  Map inverse() const {
    if (!is_bijective()) throw StructuralError("inverse: map is not a bijection");
    std::vector<Index> t(table_.size());
    for (Index x = 0; x < table_.size(); ++x) t[table_[x]] = x;
    return Map(target_, source_, std::move(t));
  }

  friend bool operator==(const Map& a, const Map& b) {
    return same_ground(a.source_, b.source_) && same_ground(a.target_, b.target_) && a.table_ == b.table_;
  }

 private:
  GroundPtr source_;
  GroundPtr target_;
  std::vector<Index> table_;
};

/// g after f.
inline Map then(const Map& f, const Map& g) {
  require_same_ground(f.target(), g.source(), "map composition");
  std::vector<Index> t(f.table().size());
  for (Index x = 0; x < t.size(); ++x) t[x] = g(f(x));
  return Map(f.source(), g.target(), std::move(t));
}

// ---------------------------------------------------------------------------
// Relation algebra

inline Entourage diagonal(const GroundPtr& ground) {
  Entourage d(ground);
  for (Index x = 0; x < ground->size(); ++x) d.insert(x, x);
  return d;
}

inline Entourage full(const GroundPtr& ground) {
  Entourage e(ground);
  for (Index x = 0; x < ground->size(); ++x) e.row(x).fill(true);
  return e;
}

/// A x B.
inline Entourage square(const PointSet& a, const PointSet& b) {
  require_same_ground(a.ground(), b.ground(), "square");
  Entourage e(a.ground());
  a.bits().for_each([&](Index x) { e.row(x) = b.bits(); });
  return e;
}
inline Entourage square(const PointSet& a) { return square(a, a); }

/// E[A] = union of E[x] over x in A.
inline PointSet closure(const Entourage& e, const PointSet& a) {
  require_same_ground(e.ground(), a.ground(), "closure");
  BitSet out(e.ground_size());
  a.bits().for_each([&](Index x) { out |= e.row(x); });
  return PointSet(e.ground(), std::move(out));
}

/// {x | E[x] is a subset of A}.
inline PointSet interior(const Entourage& e, const PointSet& a) {
  require_same_ground(e.ground(), a.ground(), "interior");
  BitSet out(e.ground_size());
  for (Index x = 0; x < e.ground_size(); ++x)
    if (e.row(x).is_subset_of(a.bits())) out.set(x);
  return PointSet(e.ground(), std::move(out));
}

inline Entourage invert(const Entourage& e) {
  Entourage out(e.ground());
  for (Index x = 0; x < e.ground_size(); ++x) e.row(x).for_each([&](Index y) { out.row(y).set(x); });
  return out;
}

inline Entourage unite(const Entourage& e, const Entourage& f) {
  require_same_ground(e.ground(), f.ground(), "union");
  Entourage out = e;
  for (Index x = 0; x < e.ground_size(); ++x) out.row(x) |= f.row(x);
  return out;
}

inline Entourage intersect(const Entourage& e, const Entourage& f) {
  require_same_ground(e.ground(), f.ground(), "intersection");
  Entourage out = e;
  for (Index x = 0; x < e.ground_size(); ++x) out.row(x) &= f.row(x);
  return out;
}

/// E after F: (x,z) iff exists y with (x,y) in F and (y,z) in E.
inline Entourage compose(const Entourage& e, const Entourage& f) {
  require_same_ground(e.ground(), f.ground(), "compose");
  Entourage out(e.ground());
  for (Index x = 0; x < e.ground_size(); ++x) f.row(x).for_each([&](Index y) { out.row(x) |= e.row(y); });
  return out;
}

inline bool is_subset(const Entourage& e, const Entourage& f) {
  require_same_ground(e.ground(), f.ground(), "is_subset");
  for (Index x = 0; x < e.ground_size(); ++x)
    if (!e.row(x).is_subset_of(f.row(x))) return false;
  return true;
}

/// (f x f)(E) on the target of f.
inline Entourage push(const Map& f, const Entourage& e) {
  require_same_ground(f.source(), e.ground(), "push");
  Entourage out(f.target());
  for (Index x = 0; x < e.ground_size(); ++x) e.row(x).for_each([&](Index y) { out.insert(f(x), f(y)); });
  return out;
}

/// {(x,y) | (f(x), f(y)) in E} on the source of f.
inline Entourage pull(const Map& f, const Entourage& e) {
  require_same_ground(f.target(), e.ground(), "pull");
  Entourage out(f.source());
  const std::size_t n = f.source()->size();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (e.contains(f(x), f(y))) out.row(x).set(y);
  return out;
}

/// E intersected with A x A.
inline Entourage restrict_to(const Entourage& e, const PointSet& a) {
  require_same_ground(e.ground(), a.ground(), "restrict_to");
  Entourage out(e.ground());
  a.bits().for_each([&](Index x) { out.row(x) = e.row(x) & a.bits(); });
  return out;
}

}  // namespace coarse
