#pragma once

// Theorem-verification runner: exhaustive and seeded checks over small
// instances, one VerificationCase per theorem id.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coarse/enumerate.hpp"
#include "coarse/hyperspace.hpp"
#include "coarse/maps.hpp"
#include "coarse/size.hpp"
#include "coarse/workbench/json_io.hpp"

namespace coarse::workbench {

enum class VerdictKind { kPass, kFail, kSkipped };

inline const char* verdict_name(VerdictKind v) {
  switch (v) {
    case VerdictKind::kPass: return "PASS";
    case VerdictKind::kFail: return "FAIL";
    case VerdictKind::kSkipped: return "SKIPPED";
  }
  return "FAIL";
}

struct VerificationCase {
  std::string id;
  std::string family;
  std::size_t max_ground = 0;
  std::size_t checked = 0;
  VerdictKind verdict = VerdictKind::kPass;
  /// On FAIL: {"space", "subset" | "map" | ..., "expected", "got"} replayable through the CLI.
  Json counterexample;
  std::string detail;
};

using Classifier = std::function<SizeReport(const CoarseSpace&, const PointSet&)>;

/// The shipped classifier.
inline SizeReport default_classifier(const CoarseSpace& c, const PointSet& a) { return classify(c, a); }

/// Deliberately broken classifier for fault-injection runs: reports thick = large.
inline SizeReport corrupted_classifier(const CoarseSpace& c, const PointSet& a) {
  SizeReport r = classify(c, a);
  r.flags.thick = r.flags.large;
  r.flags.meshy = !r.flags.thick;
  return r;
}

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t max_ground = 4;
  Classifier classifier = default_classifier;
};

// Capacity bounds of the individual checks.
inline constexpr std::size_t kOracleGroundCap = 6;
inline constexpr std::size_t kLatticeGroundCap = 7;
inline constexpr std::size_t kMapExhaustiveCap = 3;
inline constexpr std::size_t kHyperGroundCap = 6;
inline constexpr std::size_t kRandomGroundCap = 12;

namespace detail {

struct CaseBuilder {
  VerificationCase c;
  bool failed() const { return c.verdict == VerdictKind::kFail; }
  void fail(Json counterexample, std::string why) {
    if (failed()) return;
    c.verdict = VerdictKind::kFail;
    c.counterexample = std::move(counterexample);
    c.detail = std::move(why);
  }
};

inline VerificationCase start(std::string id, std::string family, std::size_t bound) {
  VerificationCase c;
  c.id = std::move(id);
  c.family = std::move(family);
  c.max_ground = bound;
  return c;
}

inline Json subset_case(const CoarseSpace& c, const PointSet& a) {
  return Json{{"space", space_json(c)}, {"subset", subset_json(a)}};
}

inline std::size_t capped(std::size_t requested, std::size_t cap, VerificationCase& vc) {
  if (requested > cap) vc.detail = "bound capped at " + std::to_string(cap) + " (capacity)";
  return std::min(requested, cap);
}

/// Exhaustive (C, A) loop; `check` returns a description of the failure, or "".
template <typename Check>
VerificationCase exhaustive_subsets(std::string id, std::string family, std::size_t requested, std::size_t cap,
                                    Check check) {
  CaseBuilder b{start(std::move(id), std::move(family), 0)};
  const std::size_t bound = capped(requested, cap, b.c);
  b.c.max_ground = bound;
  for (std::size_t n = 1; n <= bound && !b.failed(); ++n)
    for (const auto& c : all_coarse_spaces(n)) {
      const auto subsets = all_subsets(c.ground());
      for (const auto& a : subsets) {
        ++b.c.checked;
        if (auto why = check(c, a, subsets); !why.empty()) {
          b.fail(subset_case(c, a), why);
          break;
        }
      }
      if (b.failed()) break;
    }
  return std::move(b.c);
}

inline std::string compare_flag(const char* name, bool got, bool expected) {
  if (got == expected) return "";
  return std::string(name) + ": classifier says " + (got ? "true" : "false") + ", criterion says " +
         (expected ? "true" : "false");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Size classifier

inline VerificationCase verify_oracle_agreement(const VerifyOptions& o) {
  detail::CaseBuilder b{detail::start("classify_matches_oracle:all-subsets-of-emax", "finite partitions", 0)};
  const std::size_t bound = detail::capped(o.max_ground, kOracleGroundCap, b.c);
  b.c.max_ground = bound;
  std::size_t skipped = 0;
  for (std::size_t n = 1; n <= bound && !b.failed(); ++n)
    for (const auto& c : all_coarse_spaces(n)) {
      if (c.emax().pair_count() > SizeOracle::kMaxPairs) {
        ++skipped;
        continue;
      }
      const SizeOracle oracle(c);
      for (const auto& a : all_subsets(c.ground())) {
        ++b.c.checked;
        const SizeFlags got = o.classifier(c, a).flags;
        const SizeFlags want = oracle.flags(a);
        if (!(got == want)) {
          Json ce = detail::subset_case(c, a);
          ce["expected"] = flags_json(want);
          ce["got"] = flags_json(got);
          b.fail(std::move(ce), "fast classifier disagrees with the definitional oracle");
          break;
        }
      }
      if (b.failed()) break;
    }
  if (skipped && !b.failed())
    b.c.detail = std::to_string(skipped) + " spaces above the oracle's 16-pair capacity were not evaluated";
  return std::move(b.c);
}

inline VerificationCase verify_thick_meets_large(const VerifyOptions& o) {
  return detail::exhaustive_subsets(
      "thick_meets_large:L∩A≠∅-for-each-large-subset", "finite partitions", o.max_ground, kLatticeGroundCap,
      [&](const CoarseSpace& c, const PointSet& a, const std::vector<PointSet>& subsets) {
        bool criterion = true;
        for (const auto& l : subsets)
          if (is_large(c, l) && !l.intersects(a)) criterion = false;
        return detail::compare_flag("thick", o.classifier(c, a).flags.thick, criterion);
      });
}

inline VerificationCase verify_extralarge_criterion(const VerifyOptions& o) {
  return detail::exhaustive_subsets(
      "extralarge_meets_large:L∩A-is-large-for-each-large-subset", "finite partitions", o.max_ground,
      kLatticeGroundCap, [&](const CoarseSpace& c, const PointSet& a, const std::vector<PointSet>& subsets) {
        bool criterion = true;
        for (const auto& l : subsets)
          if (is_large(c, l) && !is_large(c, l & a)) criterion = false;
        return detail::compare_flag("extralarge", o.classifier(c, a).flags.extralarge, criterion);
      });
}

inline VerificationCase verify_small_complement(const VerifyOptions& o) {
  return detail::exhaustive_subsets(
      "small_large_difference:L∖A-is-large-for-each-large-subset", "finite partitions", o.max_ground,
      kLatticeGroundCap, [&](const CoarseSpace& c, const PointSet& a, const std::vector<PointSet>& subsets) {
        if (c.size() == 0) return std::string();
        bool criterion = true;
        for (const auto& l : subsets)
          if (is_large(c, l) && !is_large(c, l - a)) criterion = false;
        return detail::compare_flag("small", o.classifier(c, a).flags.small, criterion);
      });
}

inline VerificationCase verify_small_union_meshy(const VerifyOptions& o) {
  return detail::exhaustive_subsets(
      "small_meshy_union:A∪B-is-meshy-for-each-meshy-subset", "finite partitions", o.max_ground, kLatticeGroundCap,
      [&](const CoarseSpace& c, const PointSet& a, const std::vector<PointSet>& subsets) {
        bool criterion = true;
        for (const auto& m : subsets)
          if (is_meshy(c, m) && !is_meshy(c, a | m)) criterion = false;
        return detail::compare_flag("small", o.classifier(c, a).flags.small, criterion);
      });
}

/// Connected X: thin iff the structure equals the satellite structure of its bornology.
inline VerificationCase verify_thin_satellite(const VerifyOptions& o) {
  return detail::exhaustive_subsets(
      "thin_is_satellite:X=X_{B_X}", "connected partitions (A = X)", o.max_ground, kLatticeGroundCap,
      [&](const CoarseSpace& c, const PointSet& a, const std::vector<PointSet>&) {
        if (a.size() != c.size() || !is_connected(c)) return std::string();
        const bool same = satellite(c.ground(), induced_bornology(c)).emax() == c.emax();
        return detail::compare_flag("thin(X)", o.classifier(c, a).flags.thin, same);
      });
}

/// A large in B and B large in X imply A large in X.
inline VerificationCase verify_large_transitivity(const VerifyOptions& o) {
  detail::CaseBuilder b{detail::start("large_transitive:A-large-in-B-large-in-X", "random triples", 0)};
  const std::size_t bound = detail::capped(std::max<std::size_t>(o.max_ground, 6), kRandomGroundCap, b.c);
  b.c.max_ground = bound;
  Rng rng(o.seed ^ 0x51ULL);
  for (int trial = 0; trial < 500 && !b.failed(); ++trial) {
    const auto n = 1 + rng.below(bound);
    const auto ground = make_ground(n);
    const CoarseSpace c = rng.space(ground);
    const PointSet bset = rng.subset(ground);
    const PointSet aset = rng.subset(ground) & bset;
    ++b.c.checked;
    if (is_large_in(c, aset, bset) && is_large(c, bset) && !is_large(c, aset)) {
      Json ce = detail::subset_case(c, aset);
      ce["B"] = subset_json(bset);
      b.fail(std::move(ce), "A large in B, B large in X, A not large");
    }
  }
  return std::move(b.c);
}

// ---------------------------------------------------------------------------
// Coarse space structure

inline VerificationCase verify_closure_operator(const VerifyOptions& o) {
  detail::CaseBuilder b{detail::start("closure_operator:is-a-closure-operator-on", "random (C, A, B)", 0)};
  const std::size_t bound = detail::capped(std::max<std::size_t>(o.max_ground, 8), kRandomGroundCap, b.c);
  b.c.max_ground = bound;
  Rng rng(o.seed ^ 0xC1ULL);
  for (int trial = 0; trial < 500 && !b.failed(); ++trial) {
    const auto n = rng.below(bound + 1);
    const auto ground = make_ground(n);
    const CoarseSpace c = rng.space(ground);
    const PointSet a = rng.subset(ground), bs = rng.subset(ground);
    const PointSet all = PointSet::all(ground), none(ground);
    ++b.c.checked;
    const char* broken = nullptr;
    if (!a.is_subset_of(gal(c, a))) broken = "A ⊆ G(A)";
    else if (!gal(c, none).empty()) broken = "G(∅) = ∅";
    else if (!(gal(c, gal(c, a)) == gal(c, a))) broken = "G(G(A)) = G(A)";
    else if (!(gal(c, a | bs) == (gal(c, a) | gal(c, bs)))) broken = "G(A ∪ B) = G(A) ∪ G(B)";
    else if (!core(c, a).is_subset_of(a)) broken = "C(A) ⊆ A";
    else if (!(core(c, all) == all)) broken = "C(X) = X";
    else if (!(core(c, core(c, a)) == core(c, a))) broken = "C(C(A)) = C(A)";
    else if (!(core(c, a & bs) == (core(c, a) & core(c, bs)))) broken = "C(A ∩ B) = C(A) ∩ C(B)";
    else if (!(core(c, a).complement() == gal(c, a.complement()))) broken = "X∖C(A) = G(X∖A)";
    else if (!(gal(c, core(c, a)) == core(c, a))) broken = "G(C(A)) = C(A)";
    if (broken) {
      Json ce = detail::subset_case(c, a);
      ce["B"] = subset_json(bs);
      b.fail(std::move(ce), broken);
    }
  }
  return std::move(b.c);
}

inline VerificationCase verify_duality(const VerifyOptions& o) {
  detail::CaseBuilder b{detail::start("closure_duality:E[A]=X∖intr_{X,E⁻¹}(X∖A)", "random (E, A)", 0)};
  const std::size_t bound = detail::capped(std::max<std::size_t>(o.max_ground, 8), kRandomGroundCap, b.c);
  b.c.max_ground = bound;
  Rng rng(o.seed ^ 0xD0ULL);
  for (int trial = 0; trial < 1000 && !b.failed(); ++trial) {
    const auto ground = make_ground(rng.below(bound + 1));
    const Entourage e = rng.relation(ground);
    const PointSet a = rng.subset(ground);
    ++b.c.checked;
    if (!(closure(e, a) == interior(invert(e), a.complement()).complement())) {
      Json pairs = Json::array();
      for (const auto& [x, y] : e.pairs()) pairs.push_back(Json::array({x, y}));
      b.fail(Json{{"size", ground->size()}, {"relation", pairs}, {"subset", subset_json(a)}}, "duality fails");
    }
  }
  return std::move(b.c);
}

inline VerificationCase verify_fixpoint(const VerifyOptions& o) {
  detail::CaseBuilder b{detail::start("emax_fixpoint:closure-of-the-generators", "random generators", 0)};
  const std::size_t bound = detail::capped(std::max<std::size_t>(o.max_ground, 8), kRandomGroundCap, b.c);
  b.c.max_ground = bound;
  Rng rng(o.seed ^ 0xF1ULL);
  for (int trial = 0; trial < 300 && !b.failed(); ++trial) {
    const auto ground = make_ground(rng.below(bound + 1));
    std::vector<Entourage> gens;
    for (auto k = rng.below(3); k > 0; --k) gens.push_back(rng.relation(ground, 1, 8));
    const CoarseSpace c = generate(ground, gens);
    ++b.c.checked;
    if (!(c.emax() == equivalence_fixpoint(ground, gens))) b.fail(space_json(c), "union-find emax differs from the fixpoint");
  }
  return std::move(b.c);
}

inline VerificationCase verify_prebornology(const VerifyOptions& o) {
  detail::CaseBuilder b{detail::start("induced_prebornology:closed-under-non-disjoint-unions", "finite partitions", 0)};
  const std::size_t bound = detail::capped(o.max_ground, kLatticeGroundCap, b.c);
  b.c.max_ground = bound;
  for (std::size_t n = 0; n <= bound && !b.failed(); ++n)
    for (const auto& c : all_coarse_spaces(n)) {
      ++b.c.checked;
      const Bornology born = induced_bornology(c);
      if (!born.is_prebornology()) b.fail(space_json(c), "induced family is not a prebornology");
      else if (born.is_bornology() != (c.classes().size() <= 1))
        b.fail(space_json(c), "unrestricted union rule disagrees with connectedness");
      else if (!is_subset(satellite(c.ground(), born).emax(), c.emax()))
        b.fail(space_json(c), "satellite structure exceeds emax");
      if (b.failed()) break;
    }
  return std::move(b.c);
}

// ---------------------------------------------------------------------------
// Maps

namespace detail {

template <typename Visit>
void for_all_maps(const CoarseSpace& cx, const CoarseSpace& cy, Visit visit) {
  const std::size_t n = cx.size(), m = cy.size();
  std::vector<Index> t(n, 0);
  for (;;) {
    if (!visit(Map(cx.ground(), cy.ground(), t))) return;
    std::size_t i = 0;
    while (i < n && ++t[i] == m) t[i++] = 0;
    if (i == n) return;
  }
}

/// Search over every g: Y -> X for a bornologous two-sided bornotopy inverse.
inline bool inverse_exists_by_search(const Map& f, const CoarseSpace& cx, const CoarseSpace& cy) {
  bool found = false;
  for_all_maps(cy, cx, [&](const Map& g) {
    bool ok = true;
    for (Index y = 0; y < cy.size() && ok; ++y)
      for (Index y2 = 0; y2 < cy.size() && ok; ++y2)
        ok = !cy.emax().contains(y, y2) || cx.emax().contains(g(y), g(y2));
    for (Index x = 0; x < cx.size() && ok; ++x) ok = cx.emax().contains(g(f(x)), x);
    for (Index y = 0; y < cy.size() && ok; ++y) ok = cy.emax().contains(f(g(y)), y);
    found = ok;
    return !found;
  });
  return found;
}

/// Every check of the two map propositions on one map; "" when all hold.
inline std::string map_propositions(const Map& f, const CoarseSpace& cx, const CoarseSpace& cy) {
  const bool ep = is_effectively_proper(f, cx, cy);
  if (f.is_bijective() && ep != is_bornologous(f.inverse(), cy, cx))
    return "bijection: effectively proper differs from having a bornologous inverse";
  const auto g = bornotopy_inverse(f, cx, cy);
  const bool expected = ep && is_coarsely_surjective(f, cy);
  if (g.has_value() != expected) return "bornotopy inverse existence differs from effectively proper and coarsely surjective";
  if (inverse_exists_by_search(f, cx, cy) != expected)
    return "exhaustive inverse search differs from effectively proper and coarsely surjective";
  if (expected) {
    if (!is_bornologous(*g, cy, cx)) return "constructed inverse is not bornologous";
    // Independent recheck of both bornotopies.
    for (Index x = 0; x < cx.size(); ++x)
      if (!cx.emax().contains((*g)(f(x)), x)) return "g∘f is not bornotopic to the identity";
    for (Index y = 0; y < cy.size(); ++y)
      if (!cy.emax().contains(f((*g)(y)), y)) return "f∘g is not bornotopic to the identity";
  }
  return "";
}

inline Json map_case(const Map& f, const CoarseSpace& cx, const CoarseSpace& cy) {
  return Json{{"space_x", space_json(cx)}, {"space_y", space_json(cy)}, {"map", map_json(f)}};
}

}  // namespace detail

inline VerificationCase verify_map_propositions(const VerifyOptions& o) {
  detail::CaseBuilder b{detail::start("bornotopy_inverse:has-a-bornologous-inverse", "all maps between partitions", 0)};
  const std::size_t bound = detail::capped(o.max_ground, kMapExhaustiveCap, b.c);
  b.c.max_ground = bound;
  for (std::size_t n = 1; n <= bound && !b.failed(); ++n)
    for (std::size_t m = 1; m <= bound && !b.failed(); ++m)
      for (const auto& cx : all_coarse_spaces(n))
        for (const auto& cy : all_coarse_spaces(m)) {
          detail::for_all_maps(cx, cy, [&](const Map& f) {
            ++b.c.checked;
            if (auto why = detail::map_propositions(f, cx, cy); !why.empty()) b.fail(detail::map_case(f, cx, cy), why);
            return !b.failed();
          });
          if (b.failed()) return std::move(b.c);
        }
  // Sampled at size 4 when the bound allows it.
  if (o.max_ground >= 4) {
    b.c.detail = "exhaustive up to 3, sampled at 4";
    Rng rng(o.seed ^ 0x4AULL);
    const auto gx = make_ground(4), gy = make_ground(4);
    for (int trial = 0; trial < 400 && !b.failed(); ++trial) {
      const CoarseSpace cx = rng.space(gx), cy = rng.space(gy);
      std::vector<Index> t(4);
      for (auto& v : t) v = rng.below(4);
      const Map f(gx, gy, t);
      ++b.c.checked;
      if (auto why = detail::map_propositions(f, cx, cy); !why.empty()) b.fail(detail::map_case(f, cx, cy), why);
    }
  }
  return std::move(b.c);
}

inline VerificationCase verify_asymorphism_commutes(const VerifyOptions& o) {
  detail::CaseBuilder b{
      detail::start("asymorphism_preserves:asymorphism-preserves-G-and-C", "bijections between partitions", 0)};
  const std::size_t bound = detail::capped(o.max_ground, kMapExhaustiveCap + 1, b.c);
  b.c.max_ground = bound;
  for (std::size_t n = 1; n <= bound && !b.failed(); ++n)
    for (const auto& cx : all_coarse_spaces(n))
      for (const auto& cy : all_coarse_spaces(n)) {
        detail::for_all_maps(cx, cy, [&](const Map& f) {
          if (!is_asymorphism(f, cx, cy)) return true;
          for (const auto& a : all_subsets(cx.ground())) {
            ++b.c.checked;
            if (!(f.image(gal(cx, a)) == gal(cy, f.image(a))) || !(f.image(core(cx, a)) == core(cy, f.image(a)))) {
              Json ce = detail::map_case(f, cx, cy);
              ce["subset"] = subset_json(a);
              b.fail(std::move(ce), "asymorphism does not commute with G or C");
              return false;
            }
          }
          return true;
        });
        if (b.failed()) return std::move(b.c);
      }
  return std::move(b.c);
}

inline VerificationCase verify_composition(const VerifyOptions& o) {
  detail::CaseBuilder b{detail::start("composition_closure:composites-of-coarse-equivalences", "random triples", 0)};
  const std::size_t bound = detail::capped(std::max<std::size_t>(o.max_ground, 5), kRandomGroundCap, b.c);
  b.c.max_ground = bound;
  Rng rng(o.seed ^ 0xCCULL);
  auto random_map = [&](const GroundPtr& s, const GroundPtr& t) {
    std::vector<Index> table(s->size());
    for (auto& v : table) v = rng.below(t->size());
    return Map(s, t, table);
  };
  for (int trial = 0; trial < 500 && !b.failed(); ++trial) {
    const auto gx = make_ground(1 + rng.below(bound)), gy = make_ground(1 + rng.below(bound)),
               gz = make_ground(1 + rng.below(bound));
    const CoarseSpace cx = rng.space(gx), cy = rng.space(gy), cz = rng.space(gz);
    const Map f = random_map(gx, gy), g = random_map(gy, gz);
    const Map gf = then(f, g);
    ++b.c.checked;
    if (is_bornologous(f, cx, cy) && is_bornologous(g, cy, cz) && !is_bornologous(gf, cx, cz))
      b.fail(detail::map_case(gf, cx, cz), "composite of bornologous maps is not bornologous");
    else if (is_coarse_equivalence(f, cx, cy) && is_coarse_equivalence(g, cy, cz) && !is_coarse_equivalence(gf, cx, cz))
      b.fail(detail::map_case(gf, cx, cz), "composite of coarse equivalences is not a coarse equivalence");
  }
  return std::move(b.c);
}

// ---------------------------------------------------------------------------
// Hyperspaces

template <typename Check>
VerificationCase hyper_exhaustive(std::string id, std::string family, const VerifyOptions& o, Check check,
                                  bool connected_only = false) {
  detail::CaseBuilder b{detail::start(std::move(id), std::move(family), 0)};
  const std::size_t bound = detail::capped(o.max_ground, kHyperGroundCap, b.c);
  b.c.max_ground = bound;
  for (std::size_t n = 1; n <= bound && !b.failed(); ++n)
    for (const auto& c : all_coarse_spaces(n)) {
      if (connected_only && !is_connected(c)) continue;
      ++b.c.checked;
      if (auto why = check(c); !why.empty()) {
        b.fail(Json{{"space", space_json(c)}}, why);
        break;
      }
    }
  return std::move(b.c);
}

inline VerificationCase verify_iota(const VerifyOptions& o) {
  return hyper_exhaustive("iota_embedding:is-an-asymorphic-embedding", "finite partitions", o,
                          [](const CoarseSpace& c) {
                            const Verdict v = iota_check(c);
                            return v.pass ? std::string() : v.detail;
                          });
}

inline VerificationCase verify_c_map(const VerifyOptions& o) {
  return hyper_exhaustive("c_map_injection:is-a-bornologous-injection", "finite partitions", o,
                          [](const CoarseSpace& c) {
                            return c_map_check(c).pass() ? std::string() : std::string("c is not a bornologous injection");
                          });
}

inline VerificationCase verify_large_hyperspace(const VerifyOptions& o) {
  return hyper_exhaustive("large_hyperspace_connected:L-coarse-hyperspace", "finite partitions", o,
                          [](const CoarseSpace& c) {
                            const auto s = summarize(hyper_coarse(c, Selector::kLarge));
                            return s.connected ? std::string() : std::string("LARGE hyperspace is not connected");
                          });
}

inline VerificationCase verify_flat_hyperspace(const VerifyOptions& o) {
  return hyper_exhaustive(
      "flat_hyperspace_connected:♭-coarse-hyperspace", "connected partitions", o,
      [](const CoarseSpace& c) {
        const auto s = summarize(hyper_coarse(c, Selector::kFlat));
        return s.connected ? std::string() : std::string("FLAT hyperspace of a connected base is not connected");
      },
      true);
}

inline VerificationCase verify_flat_bornology_invariance(const VerifyOptions& o) {
  return hyper_exhaustive("flat_bornology_invariance:induce-the-same-prebornology", "partitions, two generator sets", o,
                          [](const CoarseSpace& c) {
                            // Same emax from a chain of generators instead of the class partition.
                            std::vector<Entourage> chain;
                            for (const auto& k : c.classes()) {
                              const auto m = k.members();
                              Entourage e(c.ground());
                              for (std::size_t i = 1; i < m.size(); ++i) e.insert(m[i - 1], m[i]);
                              chain.push_back(e);
                            }
                            const CoarseSpace other = generate(c.ground(), chain);
                            return flat_bornologies_agree(c, other) ? std::string()
                                                                    : std::string("FLAT bornologies differ");
                          });
}

inline VerificationCase verify_exp_hausdorff(const VerifyOptions& o) {
  detail::CaseBuilder b{detail::start("exp_hausdorff:called-the-Hausdorff-metric", "random pairs on [0..100]", 101)};
  Rng rng(o.seed ^ 0xE9ULL);
  const WindowSpace w = integer_interval(100);
  for (int trial = 0; trial < 500 && !b.failed(); ++trial) {
    const PointSet a = rng.subset(w.ground(), 1, 20), bs = rng.subset(w.ground(), 1, 20);
    const Distance r = static_cast<Distance>(rng.below(101));
    ++b.c.checked;
    const Entourage e = entourage_at(w, r);
    const bool related = exp_related(e, a, bs);
    const Distance d = hausdorff_distance(a, bs);
    if (related != (d <= r))
      b.fail(Json{{"A", subset_json(a)}, {"B", subset_json(bs)}, {"r", r}}, "exp E_r disagrees with d_H <= r");
  }
  return std::move(b.c);
}

// ---------------------------------------------------------------------------

using CaseFn = VerificationCase (*)(const VerifyOptions&);

struct TheoremEntry {
  const char* key;  // selector name
  CaseFn run;
};

inline const std::vector<TheoremEntry>& theorem_inventory() {
  static const std::vector<TheoremEntry> inventory = {
      {"asymorphism_preserves", verify_asymorphism_commutes},
      {"bornotopy_inverse", verify_map_propositions},
      {"c_map_injection", verify_c_map},
      {"classify_matches_oracle", verify_oracle_agreement},
      {"closure_duality", verify_duality},
      {"closure_operator", verify_closure_operator},
      {"composition_closure", verify_composition},
      {"emax_fixpoint", verify_fixpoint},
      {"exp_hausdorff", verify_exp_hausdorff},
      {"extralarge_meets_large", verify_extralarge_criterion},
      {"flat_bornology_invariance", verify_flat_bornology_invariance},
      {"flat_hyperspace_connected", verify_flat_hyperspace},
      {"induced_prebornology", verify_prebornology},
      {"iota_embedding", verify_iota},
      {"large_hyperspace_connected", verify_large_hyperspace},
      {"large_transitive", verify_large_transitivity},
      {"small_large_difference", verify_small_complement},
      {"small_meshy_union", verify_small_union_meshy},
      {"thick_meets_large", verify_thick_meets_large},
      {"thin_is_satellite", verify_thin_satellite},
  };
  return inventory;
}

/// "all", a theorem key, a full theorem id, or "thm:key-with-dashes".
inline std::vector<const TheoremEntry*> select_theorems(const std::string& selector) {
  std::string key = selector;
  if (key.rfind("thm:", 0) == 0) key = key.substr(4);
  if (const auto colon = key.find(':'); colon != std::string::npos) key = key.substr(0, colon);
  std::replace(key.begin(), key.end(), '-', '_');
  std::vector<const TheoremEntry*> out;
  for (const auto& t : theorem_inventory())
    if (key == "all" || key == t.key) out.push_back(&t);
  if (out.empty()) throw InputError("unknown theorem selector \"" + selector + "\"");
  return out;
}

inline std::vector<VerificationCase> run_verification(const std::string& selector, const VerifyOptions& o) {
  std::vector<VerificationCase> cases;
  for (const auto* t : select_theorems(selector)) {
    try {
      cases.push_back(t->run(o));
    } catch (const CapacityError& e) {
      VerificationCase c;
      c.id = t->key;
      c.verdict = VerdictKind::kSkipped;
      c.detail = e.what();
      cases.push_back(std::move(c));
    }
  }
  std::sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return cases;
}

inline bool any_failed(const std::vector<VerificationCase>& cases) {
  return std::any_of(cases.begin(), cases.end(), [](const auto& c) { return c.verdict == VerdictKind::kFail; });
}

inline Json verification_json(const std::vector<VerificationCase>& cases, const VerifyOptions& o) {
  Json list = Json::array();
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& c : cases) {
    Json j{{"id", c.id},
           {"family", c.family},
           {"bounds", {{"max_ground", c.max_ground}, {"checked", c.checked}}},
           {"verdict", verdict_name(c.verdict)},
           {"detail", c.detail}};
    j["counterexample"] = c.verdict == VerdictKind::kFail ? c.counterexample : Json(nullptr);
    list.push_back(std::move(j));
    (c.verdict == VerdictKind::kPass ? pass : c.verdict == VerdictKind::kFail ? fail : skipped)++;
  }
  return Json{{"kind", "verification"},
              {"seed", o.seed},
              {"max_ground", o.max_ground},
              {"cases", list},
              {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}}};
}

}  // namespace coarse::workbench
