#include <algorithm>
#include <fstream>
#include <set>

#include "f1zeta/cli.hpp"
#include "f1zeta/error.hpp"

namespace f1zeta::cli {

namespace {

template <class T>
T field(const Json& j, const std::string& path, const char* what) {
  try {
    return j.get<T>();
  } catch (const Json::exception&) {
    throw ConfigError(path, std::string("expected ") + what);
  }
}

std::vector<IntVec> parse_vectors(const Json& j, const std::string& path, int n) {
  if (!j.is_array()) throw ConfigError(path, "expected a list of generator vectors");
  std::vector<IntVec> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = path + "[" + std::to_string(k) + "]";
    auto v = field<std::vector<Int>>(j[k], p, "an array of integers");
    if (static_cast<int>(v.size()) != n - 1)
      throw ConfigError(p, "generator must have n-1 = " + std::to_string(n - 1) + " Lambda-coordinates");
    out.emplace_back(v.begin(), v.end());
  }
  if (static_cast<int>(out.size()) != n - 1)
    throw ConfigError(path, "need exactly n-1 = " + std::to_string(n - 1) + " generators");
  return out;
}

void validate_lattice(const TranslationSubgroup& t, const std::string& path) {
  try {
    t.index();
    t.check_type_zero();
  } catch (const InvalidInput& e) {
    throw ConfigError(path, e.what());
  }
}

}  // namespace

RunConfig parse_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("<root>", "expected a JSON object");
  static const std::set<std::string> known{"n",         "gamma",     "maxDegree",        "scale", "tolerance",
                                           "checks",    "limits",    "detEngine",        "label", "testPerturbation"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw ConfigError(k, "unknown field");

  RunConfig c;
  if (!j.contains("n")) throw ConfigError("n", "missing");
  c.n = field<int>(j["n"], "n", "an integer");
  if (c.n < 2) throw ConfigError("n", "must be at least 2");
  if (c.n > 6) throw ConfigError("n", "must be at most 6");
  c.label = j.value("label", std::string());

  if (!j.contains("gamma") || !j["gamma"].is_object()) throw ConfigError("gamma", "missing or not an object");
  const Json& g = j["gamma"];
  c.kind = field<std::string>(g.value("kind", Json("translation")), "gamma.kind", "a string");
  if (c.kind == "translation") {
    if (!g.contains("basis")) throw ConfigError("gamma.basis", "missing");
    c.translation = {c.n, parse_vectors(g["basis"], "gamma.basis", c.n)};
    validate_lattice(c.translation, "gamma.basis");
  } else if (c.kind == "affine") {
    if (!g.contains("lattice")) throw ConfigError("gamma.lattice", "missing");
    c.affine.lattice = {c.n, parse_vectors(g["lattice"], "gamma.lattice", c.n)};
    validate_lattice(c.affine.lattice, "gamma.lattice");
    const Json perms = g.value("perms", Json::array());
    for (std::size_t k = 0; k < perms.size(); ++k) {
      const std::string p = "gamma.perms[" + std::to_string(k) + "]";
      auto images = field<std::vector<int>>(perms[k], p, "an array of 1-based images");
      if (static_cast<int>(images.size()) != c.n) throw ConfigError(p, "permutation must have n entries");
      try {
        c.affine.perm_generators.push_back(Permutation::from_one_based(images));
      } catch (const InvalidInput& e) {
        throw ConfigError(p, e.what());
      }
    }
    try {
      c.affine.perm_group();
    } catch (const InvalidInput& e) {
      throw ConfigError("gamma.perms", e.what());
    }
  } else {
    throw ConfigError("gamma.kind", "must be \"translation\" or \"affine\"");
  }

  c.max_degree = field<int>(j.value("maxDegree", Json(12)), "maxDegree", "an integer");
  if (c.max_degree < 0) throw ConfigError("maxDegree", "must be nonnegative");
  if (c.max_degree > 200) throw ConfigError("maxDegree", "must be at most 200");

  const auto scale = field<std::string>(j.value("scale", Json("geodesic")), "scale", "a string");
  if (scale == "geodesic")
    c.scale = LengthScale::geodesic;
  else if (scale == "factorial")
    c.scale = LengthScale::factorial;
  else
    throw ConfigError("scale", "must be \"geodesic\" or \"factorial\"");

  c.tolerance = field<double>(j.value("tolerance", Json(1e-9)), "tolerance", "a number");
  if (!(c.tolerance > 0)) throw ConfigError("tolerance", "must be positive");

  const Json checks = j.value("checks", Json("all"));
  if (checks.is_string() && checks.get<std::string>() == "all") {
    c.checks = all_checks();
  } else {
    auto names = field<std::vector<std::string>>(checks, "checks", "\"all\" or a list of check names");
    for (const auto& name : names)
      if (std::find(all_checks().begin(), all_checks().end(), name) == all_checks().end())
        throw ConfigError("checks", "unknown check \"" + name + "\"");
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    c.checks = names;
  }
  if (c.kind == "affine")
    for (const auto& name : c.checks)
      if (name != "selberg_series" && name != "invariants")
        throw ConfigError("checks", "check \"" + name + "\" needs a translation group");

  if (j.contains("limits")) {
    const Json& l = j["limits"];
    if (!l.is_object()) throw ConfigError("limits", "expected an object");
    c.limits.acknowledge_override =
        field<bool>(l.value("acknowledgeOverride", Json(false)), "limits.acknowledgeOverride", "a boolean");
    const Limits defaults;
    c.limits.max_vertices = field<Int>(l.value("maxVertices", Json(defaults.max_vertices)), "limits.maxVertices", "an integer");
    c.limits.max_box_points =
        field<Int>(l.value("maxBoxPoints", Json(defaults.max_box_points)), "limits.maxBoxPoints", "an integer");
    if (c.limits.max_vertices <= 0) throw ConfigError("limits.maxVertices", "must be positive");
    if (c.limits.max_box_points <= 0) throw ConfigError("limits.maxBoxPoints", "must be positive");
    if (!c.limits.acknowledge_override) {
      if (c.limits.max_vertices > defaults.max_vertices)
        throw ConfigError("limits.maxVertices", "raising a cap needs limits.acknowledgeOverride = true");
      if (c.limits.max_box_points > defaults.max_box_points)
        throw ConfigError("limits.maxBoxPoints", "raising a cap needs limits.acknowledgeOverride = true");
    }
  }

  const auto engine = field<std::string>(j.value("detEngine", Json("multimodular")), "detEngine", "a string");
  if (engine == "multimodular")
    c.engine = DetEngine::multimodular;
  else if (engine == "bareiss")
    c.engine = DetEngine::bareiss;
  else
    throw ConfigError("detEngine", "must be \"multimodular\" or \"bareiss\"");

  if (j.contains("testPerturbation")) {
    const Json& p = j["testPerturbation"];
    if (c.kind != "translation") throw ConfigError("testPerturbation", "needs a translation group");
    Perturbation pert;
    pert.type = field<int>(p.value("type", Json(1)), "testPerturbation.type", "an integer");
    pert.row = field<std::size_t>(p.value("row", Json(0)), "testPerturbation.row", "a nonnegative integer");
    pert.col = field<std::size_t>(p.value("col", Json(0)), "testPerturbation.col", "a nonnegative integer");
    pert.delta = field<std::int32_t>(p.value("delta", Json(1)), "testPerturbation.delta", "an integer");
    if (pert.type < 1 || pert.type > c.n - 1) throw ConfigError("testPerturbation.type", "must be in 1..n-1");
    const Int N = c.translation.index();
    if (static_cast<Int>(pert.row) >= N || static_cast<Int>(pert.col) >= N)
      throw ConfigError("testPerturbation", "vertex index out of range");
    c.perturbation = pert;
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("--config", std::string("not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

Json config_to_json(const RunConfig& c) {
  Json gamma;
  gamma["kind"] = c.kind;
  if (c.kind == "translation") {
    gamma["basis"] = c.translation.generators;
  } else {
    gamma["lattice"] = c.affine.lattice.generators;
    Json perms = Json::array();
    for (const auto& p : c.affine.perm_generators) {
      std::vector<int> im;
      for (int x : p.images()) im.push_back(x + 1);
      perms.push_back(im);
    }
    gamma["perms"] = perms;
  }
  Json j{{"n", c.n},
         {"gamma", gamma},
         {"maxDegree", c.max_degree},
         {"scale", to_string(c.scale)},
         {"tolerance", c.tolerance},
         {"checks", c.checks},
         {"limits",
          {{"maxVertices", c.limits.max_vertices},
           {"maxBoxPoints", c.limits.max_box_points},
           {"acknowledgeOverride", c.limits.acknowledge_override}}},
         {"detEngine", to_string(c.engine)}};
  if (!c.label.empty()) j["label"] = c.label;
  if (c.perturbation)
    j["testPerturbation"] = {{"type", c.perturbation->type},
                             {"row", c.perturbation->row},
                             {"col", c.perturbation->col},
                             {"delta", c.perturbation->delta}};
  return j;
}

}  // namespace f1zeta::cli
