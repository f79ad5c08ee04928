// Command-line workbench: classify, map-check, hyper, thin-profile, verify.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error, 3 capacity refusal.

#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "coarse/workbench/json_io.hpp"
#include "coarse/workbench/verify.hpp"

namespace {

using namespace coarse;
using namespace coarse::workbench;

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

ParsedSpace load_space(const std::string& path) { return parse_space(read_json_file(path)); }

const CoarseSpace& finite_space(const ParsedSpace& s, const char* what) {
  if (const auto* c = std::get_if<CoarseSpace>(&s.instance)) return *c;
  throw InputError(std::string(what) + " needs a finite space (give a window kind a \"generator_radius\")");
}

void emit(const Json& j) { std::cout << canonical(j); }

int cmd_classify(const std::string& space_path, const std::string& subset_path) {
  const ParsedSpace s = load_space(space_path);
  const PointSet a = parse_subset(read_json_file(subset_path), instance_ground(s.instance));
  if (const auto* c = std::get_if<CoarseSpace>(&s.instance)) {
    emit(report_json(classify(*c, a), s.caveats));
    return kExitPass;
  }
  Json j = window_profile_json(std::get<WindowSpace>(s.instance), a);
  for (const auto& cav : s.caveats) j["caveats"].push_back(cav);
  emit(j);
  return kExitPass;
}

int cmd_map_check(const std::vector<std::string>& spaces, const std::string& map_path) {
  if (spaces.size() != 2) throw InputError("map-check takes --space twice (source, then target)");
  const ParsedSpace sx = load_space(spaces[0]), sy = load_space(spaces[1]);
  const CoarseSpace& cx = finite_space(sx, "map-check");
  const CoarseSpace& cy = finite_space(sy, "map-check");
  const Map f = parse_map(read_json_file(map_path), cx.ground(), cy.ground());
  auto caveats = sx.caveats;
  caveats.insert(caveats.end(), sy.caveats.begin(), sy.caveats.end());
  emit(report_json(analyze_map(f, cx, cy), caveats));
  return kExitPass;
}

int cmd_hyper(const std::string& space_path, const std::string& selector_text, const std::string& family_path,
              Distance scale, Distance separation, Distance excision) {
  const ParsedSpace s = load_space(space_path);
  if (const auto* w = std::get_if<WindowSpace>(&s.instance)) {
    emit(c_map_window_json(c_map_check(*w, scale, separation, excision), *w));
    return kExitPass;
  }
  const CoarseSpace& c = std::get<CoarseSpace>(s.instance);
  const auto selector = parse_selector(selector_text);
  if (!selector) throw InputError("unknown selector \"" + selector_text + "\"");
  if (*selector == Selector::kExplicit && !family_path.empty()) {
    const Json doc = read_json_file(family_path);
    if (!doc.is_array()) throw InputError("family file: expected an array of subset documents");
    std::vector<PointSet> family;
    for (const auto& item : doc) family.push_back(parse_subset(item, c.ground()));
    emit(hyper_report_json(hyper_coarse(c, HyperGround(c.ground(), std::move(family), Selector::kExplicit)), c));
    return kExitPass;
  }
  emit(hyper_report_json(hyper_coarse(c, *selector), c));
  return kExitPass;
}

int cmd_thin_profile(const std::string& space_path, const std::string& subset_path) {
  const ParsedSpace s = load_space(space_path);
  const auto* w = std::get_if<WindowSpace>(&s.instance);
  if (!w) throw InputError("thin-profile needs a window space");
  PointSet a = subset_path.empty() ? PointSet::all(w->ground()) : parse_subset(read_json_file(subset_path), w->ground());
  emit(thin_profile_json(*w, a));
  return kExitPass;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::size_t max_ground, bool inject_fault) {
  VerifyOptions o;
  o.seed = seed;
  o.max_ground = max_ground;
  if (inject_fault) o.classifier = corrupted_classifier;
  const auto cases = run_verification(suite, o);
  emit(verification_json(cases, o));
  return any_failed(cases) ? kExitFailure : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite coarse-space workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));

  std::vector<std::string> spaces;
  std::string subset, map_file, selector = "ALL", family, suite = "all";
  std::uint64_t seed = 0;
  std::size_t max_ground = 4;
  Distance scale = 1, separation = 100, excision = 10;
  bool inject_fault = false;

  auto* classify_cmd = app.add_subcommand("classify", "Size report (finite) or profiles (window) for a subset");
  classify_cmd->add_option("--space", spaces, "Space document")->required()->expected(1);
  classify_cmd->add_option("--subset", subset, "Subset document")->required();

  auto* map_cmd = app.add_subcommand("map-check", "Map report between two finite spaces");
  map_cmd->add_option("--space", spaces, "Source then target space document")->required()->expected(2);
  map_cmd->add_option("--map", map_file, "Map document")->required();

  auto* hyper_cmd = app.add_subcommand("hyper", "Hyperspace report; c-map scan on windows");
  hyper_cmd->add_option("--space", spaces, "Space document")->required()->expected(1);
  hyper_cmd->add_option("--selector", selector, "ALL, FLAT, LARGE, MESHY_NONEMPTY or EXPLICIT");
  hyper_cmd->add_option("--family", family, "EXPLICIT family: array of subset documents");
  hyper_cmd->add_option("--scale", scale, "Window scale r");
  hyper_cmd->add_option("--separation", separation, "Window separation r' (> r)");
  hyper_cmd->add_option("--excision", excision, "Window exclusion radius R");

  auto* thin_cmd = app.add_subcommand("thin-profile", "Thin and satellite profiles of a window subset");
  thin_cmd->add_option("--space", spaces, "Window space document")->required()->expected(1);
  thin_cmd->add_option("--subset", subset, "Subset document (default: the whole window)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the theorem-verification suite");
  verify_cmd->add_option("--suite", suite, "all, or a theorem key or id");
  verify_cmd->add_option("--seed", seed, "Random seed");
  verify_cmd->add_option("--max-ground", max_ground, "Largest ground set size");
  verify_cmd->add_flag("--inject-fault", inject_fault, "Use a deliberately broken classifier")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(spaces.front(), subset);
    if (*map_cmd) return cmd_map_check(spaces, map_file);
    if (*hyper_cmd) return cmd_hyper(spaces.front(), selector, family, scale, separation, excision);
    if (*thin_cmd) return cmd_thin_profile(spaces.front(), subset);
    if (*verify_cmd) return cmd_verify(suite, seed, max_ground, inject_fault);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
