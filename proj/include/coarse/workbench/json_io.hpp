#pragma once

// JSON documents: space, subset, map, report, profile.
//
// nlohmann::json keeps object keys sorted, so dump() is already canonical.

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coarse/hyperspace.hpp"
#include "coarse/maps.hpp"
#include "coarse/size.hpp"
#include "coarse/window.hpp"
#include "coarse/workbench/instances.hpp"
#include "json.hpp"

namespace coarse::workbench {

using Json = nlohmann::json;

inline std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline Json read_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + ": expected an integer");
  return j.get<std::int64_t>();
}

inline Index as_index(const Json& j, const char* what) {
  const auto v = as_int(j, what);
  if (v < 0) throw InputError(std::string(what) + ": negative index");
  return static_cast<Index>(v);
}

inline std::vector<Distance> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array");
  std::vector<Distance> out;
  for (const auto& v : j) out.push_back(as_int(v, what));
  return out;
}

/// A distance, multiplied by the ingestion scale; must come out integral.
inline Distance scaled_distance(const Json& j, std::int64_t scale, const char* what) {
  if (j.is_number_integer()) return j.get<Distance>() * scale;
  if (!j.is_number()) throw InputError(std::string(what) + ": expected a number");
  const double v = j.get<double>() * static_cast<double>(scale);
  const double r = std::round(v);
  if (std::abs(v - r) > 1e-9) throw InputError(std::string(what) + ": non-integral distance; set \"scale_factor\"");
  return static_cast<Distance>(r);
}

inline Json members_json(const PointSet& s) { return s.members(); }

inline Json pair_json(const std::optional<IndexPair>& p) {
  if (!p) return nullptr;
  return Json::array({p->first, p->second});
}

inline Json set_json(const std::optional<PointSet>& s) {
  if (!s) return nullptr;
  return members_json(*s);
}

inline Json distance_json(const std::optional<Distance>& d) {
  if (!d) return nullptr;
  return *d;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Space documents

struct ParsedSpace {
  Instance instance;
  std::vector<std::string> caveats;
};

inline InstanceSpec parse_instance_spec(const Json& j, std::vector<std::string>* caveats = nullptr) {
  using detail::field;
  const auto kind_text = field(j, "kind").get<std::string>();
  const auto kind = parse_kind(kind_text);
  if (!kind) throw InputError("unknown space kind \"" + kind_text + "\"");
  InstanceSpec spec;
  spec.kind = *kind;
  if (j.contains("scales")) spec.scales = detail::int_list(j.at("scales"), "scales");
  if (j.contains("exclusion_grid")) spec.exclusion_grid = detail::int_list(j.at("exclusion_grid"), "exclusion_grid");
  if (j.contains("horizon")) spec.horizon = detail::as_int(j.at("horizon"), "horizon");
  if (j.contains("generator_radius")) spec.generator_radius = detail::as_int(j.at("generator_radius"), "generator_radius");
  if (j.contains("labels")) spec.labels = j.at("labels").get<std::vector<std::string>>();

  switch (spec.kind) {
    case InstanceKind::kFiniteRelational: {
      spec.extent = detail::as_int(field(j, "size"), "size");
      if (j.contains("generators"))
        for (const auto& p : j.at("generators")) {
          if (!p.is_array() || p.size() != 2) throw InputError("generators: expected [x, y] pairs");
          spec.generators.emplace_back(detail::as_index(p[0], "generators"), detail::as_index(p[1], "generators"));
        }
      if (j.contains("partition"))
        for (const auto& block : j.at("partition")) {
          std::vector<Index> b;
          for (const auto& v : block) b.push_back(detail::as_index(v, "partition"));
          for (std::size_t k = 1; k < b.size(); ++k) spec.generators.emplace_back(b[0], b[k]);
        }
      break;
    }
    case InstanceKind::kExplicitMetric: {
      std::int64_t scale = 1;
      if (j.contains("scale_factor")) {
        scale = detail::as_int(j.at("scale_factor"), "scale_factor");
        if (scale <= 0) throw InputError("scale_factor must be positive");
        if (caveats && scale != 1)
          caveats->push_back("distances multiplied by " + std::to_string(scale) + " at ingestion");
      }
      const auto& table = field(j, "metric_table");
      if (!table.is_array()) throw InputError("metric_table: expected an array of rows");
      for (const auto& row : table) {
        if (!row.is_array() || row.size() != table.size()) throw InputError("metric_table: rows must form a square");
        for (const auto& v : row) spec.metric_table.push_back(detail::scaled_distance(v, scale, "metric_table"));
      }
      spec.origin = j.contains("origin") ? detail::as_index(j.at("origin"), "origin") : 0;
      if (spec.horizon) *spec.horizon *= scale;
      break;
    }
    default: spec.extent = detail::as_int(field(j, "N"), "N");
  }
  return spec;
}

/// A serialized window: explicit points (as coordinates) or a distance table.
inline WindowSpace parse_window_document(const Json& j) {
  using detail::field;
  const Index origin = detail::as_index(field(j, "origin"), "origin");
  const Distance horizon = detail::as_int(field(j, "horizon"), "horizon");
  auto scales = detail::int_list(field(j, "scales"), "scales");
  auto grid = detail::int_list(field(j, "exclusion_grid"), "exclusion_grid");
  if (j.contains("metric_table")) {
    const auto& table = j.at("metric_table");
    std::vector<Distance> flat;
    for (const auto& row : table) {
      if (!row.is_array() || row.size() != table.size()) throw InputError("metric_table: rows must form a square");
      for (const auto& v : row) flat.push_back(detail::as_int(v, "metric_table"));
    }
    auto ground = make_ground(table.size(), {}, Metric(DistanceTable{table.size(), std::move(flat)}), origin);
    return WindowSpace(std::move(ground), horizon, std::move(scales), std::move(grid));
  }
  const auto& points = field(j, "points");
  if (!points.is_array()) throw InputError("points: expected an array");
  if (points.size() > kMaxInstancePoints) throw CapacityError("window exceeds the instance capacity");
  LatticePoints lat{1, {}};
  if (!points.empty() && points[0].is_array()) lat.dimension = points[0].size();
  std::vector<std::string> labels;
  for (const auto& p : points) {
    if (lat.dimension == 1 && !p.is_array()) {
      lat.coords.push_back(detail::as_int(p, "points"));
      labels.push_back(std::to_string(lat.coords.back()));
      continue;
    }
    if (!p.is_array() || p.size() != lat.dimension) throw InputError("points: inconsistent dimension");
    std::string label = "(";
    for (std::size_t k = 0; k < p.size(); ++k) {
      lat.coords.push_back(detail::as_int(p[k], "points"));
      label += (k ? "," : "") + std::to_string(lat.coords.back());
    }
    labels.push_back(label + ")");
  }
  if (origin >= points.size()) throw InputError("origin outside the window");
  auto ground = make_ground(points.size(), std::move(labels), Metric(std::move(lat)), origin);
  return WindowSpace(std::move(ground), horizon, std::move(scales), std::move(grid));
}

inline ParsedSpace parse_space(const Json& j) {
  if (detail::field(j, "kind") == "window") return ParsedSpace{parse_window_document(j), {}};
  std::vector<std::string> caveats;
  InstanceSpec spec = parse_instance_spec(j, &caveats);
  return ParsedSpace{build(spec), std::move(caveats)};
}

inline Json space_json(const CoarseSpace& c) {
  Json gens = Json::array();
  Entourage all(c.ground());
  for (const auto& g : c.generators()) all = unite(all, g);
  for (const auto& [x, y] : all.pairs()) gens.push_back(Json::array({x, y}));
  Json j{{"kind", "finite_relational"}, {"size", c.size()}, {"generators", gens}};
  if (!c.ground()->labels().empty()) j["labels"] = c.ground()->labels();
  return j;
}

inline Json space_json(const WindowSpace& w) {
  Json j{{"kind", "window"},
         {"origin", w.origin()},
         {"horizon", w.horizon()},
         {"scales", w.scales()},
         {"exclusion_grid", w.exclusion_grid()}};
  const Metric& m = w.ground()->metric();
  if (const auto* lat = m.lattice()) {
    Json pts = Json::array();
    for (Index p = 0; p < w.size(); ++p) {
      if (lat->dimension == 1) {
        pts.push_back(lat->coords[p]);
        continue;
      }
      Json c = Json::array();
      for (std::size_t k = 0; k < lat->dimension; ++k) c.push_back(lat->coords[p * lat->dimension + k]);
      pts.push_back(c);
    }
    j["points"] = pts;
  } else {
    Json rows = Json::array();
    for (Index x = 0; x < w.size(); ++x) {
      Json row = Json::array();
      for (Index y = 0; y < w.size(); ++y) row.push_back(m(x, y));
      rows.push_back(row);
    }
    j["metric_table"] = rows;
  }
  return j;
}

inline Json space_json(const Instance& inst) {
  return std::visit([](const auto& s) { return space_json(s); }, inst);
}

inline const GroundPtr& instance_ground(const Instance& inst) {
  return std::visit([](const auto& s) -> const GroundPtr& { return s.ground(); }, inst);
}

// ---------------------------------------------------------------------------
// Subset and map documents

inline PointSet select_subset(const GroundPtr& ground, const std::string& selector) {
  if (selector == "all") return PointSet::all(ground);
  if (selector == "empty") return PointSet(ground);
  if (selector != "squares" && selector != "squares_shifted_union")
    throw InputError("unknown subset selector \"" + selector + "\"");
  const auto* lat = ground->has_metric() ? ground->metric().lattice() : nullptr;
  if (!lat || lat->dimension != 1) throw InputError("selector \"" + selector + "\" needs a one-dimensional window");
  PointSet s(ground);
  for (Index p = 0; p < ground->size(); ++p) {
    const auto c = lat->coords[p];
    if (is_perfect_square(c) || (selector == "squares_shifted_union" && is_perfect_square(c - 1))) s.insert(p);
  }
  return s;
}

inline PointSet parse_subset(const Json& j, const GroundPtr& ground) {
  if (j.is_object() && j.contains("selector")) return select_subset(ground, j.at("selector").get<std::string>());
  const auto& members = detail::field(j, "members");
  if (!members.is_array()) throw InputError("members: expected an array");
  PointSet s(ground);
  for (const auto& v : members) {
    const Index i = detail::as_index(v, "members");
    if (i >= ground->size()) throw InputError("members: index " + std::to_string(i) + " outside the ground set");
    s.insert(i);
  }
  return s;
}

inline Json subset_json(const PointSet& s) { return Json{{"members", s.members()}}; }

inline Map parse_map(const Json& j, const GroundPtr& source, const GroundPtr& target) {
  const auto& table = detail::field(j, "table");
  if (!table.is_array()) throw InputError("table: expected an array");
  std::vector<Index> t;
  for (const auto& v : table) t.push_back(detail::as_index(v, "table"));
  return Map(source, target, std::move(t));
}

inline Json map_json(const Map& f) { return Json{{"table", f.table()}}; }

// ---------------------------------------------------------------------------
// Reports

inline Json flags_json(const SizeFlags& f) {
  return Json{{"large", f.large},
              {"slim", f.slim},
              {"thick", f.thick},
              {"meshy", f.meshy},
              {"piecewise_large", f.piecewise_large},
              {"small", f.small},
              {"extralarge", f.extralarge},
              {"slim_interior", f.slim_interior},
              {"thin", f.thin}};
}

inline SizeFlags parse_size_flags(const Json& j) {
  SizeFlags f;
  f.large = detail::field(j, "large").get<bool>();
  f.slim = detail::field(j, "slim").get<bool>();
  f.thick = detail::field(j, "thick").get<bool>();
  f.meshy = detail::field(j, "meshy").get<bool>();
  f.piecewise_large = detail::field(j, "piecewise_large").get<bool>();
  f.small = detail::field(j, "small").get<bool>();
  f.extralarge = detail::field(j, "extralarge").get<bool>();
  f.slim_interior = detail::field(j, "slim_interior").get<bool>();
  f.thin = detail::field(j, "thin").get<bool>();
  return f;
}

inline Json report_json(const SizeReport& r, const std::vector<std::string>& caveats = {}) {
  const auto& w = r.witnesses;
  Json wit{{"thick_class", detail::set_json(w.thick_class)},
           {"missed_class", detail::set_json(w.missed_class)},
           {"core_missed_class", detail::set_json(w.core_missed_class)},
           {"swallowed_class", detail::set_json(w.swallowed_class)},
           {"thin_excision", detail::set_json(w.thin_excision)},
           {"thin_violation", detail::pair_json(w.thin_violation)}};
  return Json{{"kind", "size_report"}, {"flags", flags_json(r.flags)}, {"witnesses", wit}, {"caveats", caveats}};
}

inline Json report_json(const MapReport& r, const std::vector<std::string>& caveats = {}) {
  const auto& f = r.flags;
  const auto& w = r.witnesses;
  Json flags{{"bornologous", f.bornologous},
             {"proper", f.proper},
             {"effectively_proper", f.effectively_proper},
             {"coarsely_surjective", f.coarsely_surjective},
             {"asymorphism", f.asymorphism},
             {"coarse_equivalence", f.coarse_equivalence}};
  Json wit{{"bornologous", detail::pair_json(w.bornologous)},
           {"proper", detail::set_json(w.proper)},
           {"effectively_proper", detail::pair_json(w.effectively_proper)},
           {"coarsely_surjective", detail::set_json(w.coarsely_surjective)}};
  Json j{{"kind", "map_report"}, {"flags", flags}, {"witnesses", wit}, {"caveats", caveats}};
  j["inverse"] = r.inverse ? Json(r.inverse->table()) : Json(nullptr);
  return j;
}

inline Json summary_json(const HyperFamilySummary& s) {
  return Json{{"selector", selector_name(s.selector)},
              {"members", s.members},
              {"components", s.components},
              {"connected", s.connected},
              {"reclosure_enlarged", s.reclosure_enlarged}};
}

inline Json hyper_report_json(const HyperSpace& h, const CoarseSpace& base) {
  const auto s = summarize(h);
  const Verdict iota = iota_check(base);
  Json flags{{"connected", s.connected},
             {"bounded", s.connected && h.space.size() > 0},
             {"reclosure_enlarged", s.reclosure_enlarged},
             {"iota_asymorphic_embedding", iota.pass}};
  Json wit{{"members", h.points.size()},
           {"components", s.components},
           {"iota_counterexample", detail::pair_json(iota.counterexample)}};
  if (base.size() <= kMaxAllFamilyGround) {
    const auto c = c_map_check(base);
    flags["c_bornologous_injection"] = c.pass();
    flags["c_effectively_proper"] = c.effectively_proper;
    wit["c_effective_properness_violation"] = detail::pair_json(c.effective_properness_violation);
  }
  Json family = Json::array();
  for (const auto& m : h.points.family()) family.push_back(m.members());
  wit["family"] = family;
  return Json{{"kind", "hyper_report"},
              {"selector", selector_name(h.points.selector())},
              {"flags", flags},
              {"witnesses", wit},
              {"caveats", Json::array()}};
}

inline Json c_map_window_json(const CMapWindowReport& r, const WindowSpace& w) {
  Json wit{{"pair", detail::pair_json(r.witness)}, {"distance", r.witness ? Json(r.witness_distance) : Json(nullptr)}};
  if (r.witness) wit["labels"] = Json::array({w.ground()->label(r.witness->first), w.ground()->label(r.witness->second)});
  return Json{{"kind", "hyper_report"},
              {"selector", "ALL"},
              {"flags", {{"thin_signature", r.thin_signature()}}},
              {"parameters", {{"scale", r.scale}, {"separation", r.separation}, {"excision", r.excision}}},
              {"witnesses", wit},
              {"caveats", window_caveats()}};
}

inline Json thin_entry_json(const ThinEntry& e) {
  return Json{{"scale", e.scale},
              {"radius", detail::distance_json(e.radius)},
              {"required", e.required},
              {"farthest_collision", detail::pair_json(e.farthest_collision)}};
}

inline Json thin_profile_json(const WindowSpace& w, const PointSet& a) {
  Json entries = Json::array();
  for (const auto& e : thin_profile(w, a).entries) entries.push_back(thin_entry_json(e));
  Json sat = Json::array();
  for (const auto& row : satellite_profile(w, a))
    sat.push_back(Json{{"scale", row.scale}, {"least_agreeing", detail::distance_json(row.least_agreeing)}});
  return Json{{"kind", "profile"},
              {"admissible_limit", w.admissible_limit()},
              {"thin_profile", entries},
              {"satellite_profile", sat},
              {"caveats", window_caveats()}};
}

/// Window-mode classification: per-scale largeness/thickness, smallness on
/// scale pairs, and the thin profile.
inline Json window_profile_json(const WindowSpace& w, const PointSet& a) {
  Json per_scale = Json::array();
  for (Distance r : w.scales())
    per_scale.push_back(Json{{"scale", r}, {"large", large_at(w, a, r)}, {"thick", thick_at(w, a, r)}});
  Json small = Json::array();
  for (Distance r : w.scales())
    for (Distance s : w.scales())
      if (s >= r) small.push_back(Json{{"r", r}, {"s", s}, {"small", small_at(w, a, r, s)}});
  Json j = thin_profile_json(w, a);
  j["scales"] = per_scale;
  j["small_at"] = small;
  return j;
}

}  // namespace coarse::workbench
