// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "coarse/enumerate.hpp"
#include "coarse/hyperspace.hpp"
#include "coarse/size.hpp"
#include "coarse/window.hpp"
#include "coarse/workbench/instances.hpp"
#include "coarse/workbench/verify.hpp"

using namespace coarse;
using namespace coarse::workbench;

namespace {

// Tolerances and limits.
constexpr double kLimitOracleSeconds = 60;
constexpr double kLimitLatticeSeconds = 120;
constexpr double kLimitSquaresSeconds = 30;
constexpr double kLimitCMapSeconds = 60;
constexpr std::int64_t kSquaresN = 40000;
constexpr std::size_t kSquaresCount = 201;
constexpr Distance kSquaresR3 = 4;
constexpr double kOscillationEps = 0.5;
constexpr Distance kCMapScale = 1;
constexpr Distance kCMapSeparation = 100;
constexpr Distance kCMapExcision = 10;

const std::vector<Distance> kScales{1, 2, 3, 5, 8, 13};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string str(std::size_t v) { return std::to_string(v); }

Outcome criterion_oracle() {
  Outcome o;
  std::size_t partitions = 0, pairs = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& c : all_coarse_spaces(n)) {
      ++partitions;
      const SizeOracle oracle(c);
      for (const auto& a : all_subsets(c.ground())) {
        ++pairs;
        o.require(classify(c, a).flags == oracle.flags(a), "disagreement at |X| = " + str(n));
      }
    }
  o.require(partitions == 23, "expected 1+2+5+15 partitions, saw " + str(partitions));
  if (o.pass) o.detail = str(partitions) + " partitions, " + str(pairs) + " (C, A) pairs";
  return o;
}

Outcome criterion_lattice() {
  Outcome o;
  std::size_t checked = 0;
  // On the empty ground the empty set is thick by convention but meets no large set.
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& c : all_coarse_spaces(n)) {
      const auto subsets = all_subsets(c.ground());
      std::vector<PointSet> large, meshy;
      for (const auto& s : subsets) {
        if (is_large(c, s)) large.push_back(s);
        if (is_meshy(c, s)) meshy.push_back(s);
      }
      for (const auto& a : subsets) {
        bool meets = true, meets_large = true, diff_large = true, union_meshy = true;
        for (const auto& l : large) {
          meets = meets && l.intersects(a);
          meets_large = meets_large && is_large(c, l & a);
          diff_large = diff_large && is_large(c, l - a);
        }
        for (const auto& b : meshy) union_meshy = union_meshy && is_meshy(c, a | b);
        o.require(is_thick(c, a) == meets, "thick criterion, |X| = " + str(n));
        o.require(is_extralarge(c, a) == meets_large, "extralarge criterion, |X| = " + str(n));
        o.require(is_small(c, a) == diff_large, "small (difference) criterion, |X| = " + str(n));
        o.require(is_small(c, a) == union_meshy, "small (meshy union) criterion, |X| = " + str(n));
        ++checked;
      }
    }
  if (o.pass) o.detail = str(checked) + " (C, A) pairs, four biconditionals each";
  return o;
}

Outcome from_cases(const std::vector<VerificationCase>& cases) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& c : cases) {
    o.require(c.verdict == VerdictKind::kPass, c.id + ": " + c.detail);
    checked += c.checked;
  }
  if (o.pass) o.detail = str(checked) + " instances";
  return o;
}

Outcome criterion_duality_and_laws() {
  const VerifyOptions opts;
  auto duality = verify_duality(opts);
  auto laws = verify_closure_operator(opts);
  Outcome o = from_cases({duality, laws});
  o.require(duality.checked == 1000 && duality.max_ground >= 8, "duality ran " + str(duality.checked) + " trials");
  o.require(laws.checked == 500, "operator laws ran " + str(laws.checked) + " trials");
  return o;
}

Outcome criterion_maps() {
  VerifyOptions opts;
  opts.max_ground = 4;
  const auto c = verify_map_propositions(opts);
  Outcome o = from_cases({c});
  o.require(c.max_ground == 3 && c.detail == "exhaustive up to 3, sampled at 4", "unexpected bounds: " + c.detail);
  return o;
}

/// Pair scan on the integer interval: balls E_r[x], E_r[y] meet iff some z
/// in [x - r, x + r] lies within r of y.
std::optional<Distance> interval_thin_oracle(const WindowSpace& w, const PointSet& a, Distance r) {
  const auto pts = a.members();
  const Distance lim = w.horizon() - r;
  Distance need = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Index x = pts[i], y = pts[j];
      if (w.radius(x) > lim || w.radius(y) > lim) continue;
      bool meet = false;
      for (std::int64_t z = coordinate(w, x) - r; z <= coordinate(w, x) + r && !meet; ++z)
        if (z >= 0 && z <= kSquaresN) meet = w.distance(static_cast<Index>(z), y) <= r;
      if (meet) need = std::max(need, std::min(w.radius(x), w.radius(y)));
    }
  if (2 * need > w.horizon()) return std::nullopt;
  return need;  // the exclusion grid of the interval is every integer
}

Outcome criterion_squares() {
  Outcome o;
  const WindowSpace w = integer_interval(kSquaresN, kScales);
  const PointSet sq = squares_in(w);
  o.require(sq.size() == kSquaresCount, "expected 201 squares, saw " + str(sq.size()));
  const ThinProfile p = thin_profile(w, sq);
  std::string values;
  for (Distance r : kScales) {
    const ThinEntry* e = p.at(r);
    o.require(e && e->radius.has_value(), "squares NONE at r = " + std::to_string(r));
    if (!o.pass) return o;
    o.require(*e->radius == interval_thin_oracle(w, sq, r), "oracle disagrees at r = " + std::to_string(r));
    o.require(*e->radius <= r * r + 1, "R(r) exceeds r^2 + 1 at r = " + std::to_string(r));
    values += (values.empty() ? "" : ",") + std::to_string(*e->radius);
  }
  o.require(p.at(3)->radius == kSquaresR3, "r = 3 entry is not 4");
  for (const auto& e : thin_profile(w, squares_shifted_union_in(w)).entries)
    o.require(!e.radius.has_value(), "shifted union finite at r = " + std::to_string(e.scale));
  if (o.pass) o.detail = "R(1,2,3,5,8,13) = " + values + "; shifted union NONE at every r";
  return o;
}

Outcome criterion_oscillation() {
  Outcome o;
  const WindowSpace shifted = squares_shifted_union_window(kSquaresN, kScales);
  const auto none = slowly_oscillating_check(shifted, indicator(squares_in(shifted)), kOscillationEps, 1);
  o.require(!none.radius.has_value(), "indicator on the shifted union is slowly oscillating at r = 1");
  const WindowSpace thin = squares_window(kSquaresN, kScales);
  const Map f = indicator(squares_in(thin));
  for (Distance r : kScales)
    o.require(slowly_oscillating_check(thin, f, kOscillationEps, r).radius.has_value(),
              "indicator on the squares window NONE at r = " + std::to_string(r));
  Rng rng(0);
  for (int trial = 0; trial < 20; ++trial) {
    const Map g = indicator(rng.subset(thin.ground()));
    for (Distance r : kScales)
      o.require(slowly_oscillating_check(thin, g, kOscillationEps, r).radius.has_value(),
                "random indicator on the squares window NONE at r = " + std::to_string(r));
  }
  if (o.pass) o.detail = "NONE on the shifted union; finite at every scale on the squares window (plus 20 random indicators)";
  return o;
}

Outcome criterion_c_map() {
  Outcome o;
  const WindowSpace shifted = squares_shifted_union_window(kSquaresN, kScales);
  const auto bad = c_map_check(shifted, kCMapScale, kCMapSeparation, kCMapExcision);
  o.require(bad.witness.has_value() && bad.witness_distance > kCMapSeparation, "no witness on the shifted union");
  const WindowSpace thin = squares_window(kSquaresN, kScales);
  o.require(c_map_check(thin, kCMapScale, kCMapSeparation, kCMapExcision).thin_signature(),
            "witness found on the squares window");
  if (o.pass)
    o.detail = "witness (" + std::to_string(coordinate(shifted, bad.witness->first)) + ", " +
               std::to_string(coordinate(shifted, bad.witness->second)) + ") at distance " +
               std::to_string(bad.witness_distance) + "; none on the squares window";
  return o;
}

Outcome criterion_hyperspace() {
  Outcome o;
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto g = make_ground(n);
    const HyperGround h(g, family_all(g), Selector::kAll);
    o.require(exp_entourage(diagonal(g), h) == diagonal(h.ground()), "exp of the diagonal is not equality");
  }
  const auto exp_case = verify_exp_hausdorff(VerifyOptions{});
  o.require(exp_case.verdict == VerdictKind::kPass && exp_case.checked == 500, "exp E_r versus d_H: " + exp_case.detail);

  Rng rng(8);
  const WindowSpace line = integer_interval(100, {1});
  for (int trial = 0; trial < 500 && o.pass; ++trial) {
    auto nonempty = [&] {
      PointSet s = rng.subset(line.ground(), 1, 20);
      if (s.empty()) s.insert(rng.below(line.size()));
      return s;
    };
    const PointSet a = nonempty(), b = nonempty(), c = nonempty();
    const Distance ab = hausdorff_distance(a, b);
    o.require((ab == 0) == (a == b), "identity of indiscernibles");
    o.require(ab == hausdorff_distance(b, a), "symmetry");
    o.require(hausdorff_distance(a, c) <= ab + hausdorff_distance(b, c), "triangle inequality");
  }

  std::size_t spaces = 0;
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& c : all_coarse_spaces(n)) {
      ++spaces;
      if (n > 0) {
        o.require(iota_check(c).pass, "iota fails on the singleton family, |X| = " + str(n));
        o.require(iota_check(c, Selector::kAll).pass, "iota fails on the ALL family, |X| = " + str(n));
      }
      o.require(is_connected(hyper_coarse(c, Selector::kLarge).space), "LARGE hyperspace disconnected");
      if (is_connected(c)) o.require(is_connected(hyper_coarse(c, Selector::kFlat).space), "FLAT hyperspace disconnected");
    }

  const WindowSpace w = integer_interval(1000, {1});
  auto same_radius = [&](const PointSet& b) {
    return flat_radius(w, WindowStructure::kMetric, b) == flat_radius(w, WindowStructure::kSatellite, b);
  };
  for (Index p = 0; p < w.size(); ++p) o.require(same_radius(PointSet(w.ground(), {p})), "singleton radius differs");
  for (int trial = 0; trial < 500; ++trial) {
    PointSet b = rng.subset(w.ground(), 1, 100);
    if (b.empty()) b.insert(rng.below(w.size()));
    o.require(same_radius(b), "FLAT radius differs between the metric and satellite structures");
  }
  if (o.pass) o.detail = str(spaces) + " base spaces; 500 Hausdorff triples; 1500 FLAT members on [0..1000]";
  return o;
}

Outcome criterion_degenerate() {
  Outcome o;
  const auto g0 = make_ground(0);
  const CoarseSpace empty = from_partition(g0, {});
  const SizeFlags e = classify(empty, PointSet(g0)).flags;
  o.require(e.large && e.thick && e.piecewise_large && e.extralarge && e.thin, "empty X: positive flags");
  o.require(!e.small && !e.slim && !e.meshy && !e.slim_interior, "empty X: negative flags");
  o.require(is_connected(empty), "empty X is connected");

  const auto g1 = make_ground(1);
  const CoarseSpace point = from_partition(g1, {{0}});
  const SizeFlags none = classify(point, PointSet(g1)).flags;
  o.require(!none.large && !none.thick && !none.piecewise_large && !none.extralarge, "one point, empty A");
  o.require(none.small && none.thin, "one point, empty A: small and thin");
  const SizeFlags whole = classify(point, PointSet::all(g1)).flags;
  o.require(whole.large && whole.thick && whole.extralarge && !whole.small && whole.thin, "one point, A = X");
  o.require(c_map_check(point).pass(), "c on one point");

  const auto g2 = make_ground(2, {}, Metric(LatticePoints{1, {0, 5}}), Index{0});
  o.require(hausdorff_distance(PointSet(g2), PointSet(g2)) == 0, "d_H of two empty sets");
  o.require(hausdorff_distance(PointSet(g2), PointSet(g2, {1})) == kInfiniteDistance, "d_H with one empty set");

  const auto g3 = make_ground(3);
  const HyperSpace h = hyper_coarse(from_partition(g3, {{0, 1, 2}}), Selector::kAll);
  const Index ei = *h.points.index_of(PointSet(g3));
  o.require(h.space.class_containing(ei).size() == 1, "empty set not isolated in the ALL hyperspace");
  o.require(!hyper_ground(from_partition(g3, {{0, 1, 2}}), Selector::kFlat).index_of(PointSet(g3)),
            "FLAT family contains the empty set");

  const WindowSpace w = integer_interval(100, kScales);
  for (const auto& t : thin_profile(w, PointSet(w.ground(), {50})).entries)
    o.require(t.radius == 0, "single point thin radius");
  if (o.pass) o.detail = "empty, one-point, d_H, hyperspace and window conventions pinned";
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
  double limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 exhaustive classifier soundness", criterion_oracle, kLimitOracleSeconds},
      {"2 lattice criteria", criterion_lattice, kLimitLatticeSeconds},
      {"3 duality and operator laws", criterion_duality_and_laws, 0},
      {"4 map propositions", criterion_maps, 0},
      {"5 squares instance", criterion_squares, kLimitSquaresSeconds},
      {"6 slow-oscillation coherence", criterion_oscillation, 0},
      {"7 c-map at scale", criterion_c_map, kLimitCMapSeconds},
      {"8 hyperspace suite", criterion_hyperspace, 0},
      {"9 degenerate-convention freeze", criterion_degenerate, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail = "runtime limit exceeded";
    }
    failures += !o.pass;
    std::printf("[%s] %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
