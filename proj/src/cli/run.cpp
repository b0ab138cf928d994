#include <chrono>
#include <functional>
#include <sstream>

#include "f1zeta/cli.hpp"
#include "f1zeta/error.hpp"
#include "f1zeta/selberg.hpp"

namespace f1zeta::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Int binomial(int n, int k) {
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Int factorial(int n) { return scale_factor(n, LengthScale::factorial); }

// Largest L <= max_degree whose walk count N d (d-1)^(L-1) stays small.
Int cycle_oracle_degree(const QuotientGraph& g, int max_degree) {
  const double d = static_cast<double>((Int{1} << g.n) - 2);
  Int best = 0;
  for (Int L = 1; L <= max_degree; ++L) {
    double walks = static_cast<double>(g.N) * d;
    for (Int i = 1; i < L; ++i) walks *= d - 1;
    if (walks > 2e7) break;
    best = L;
  }
  return best;
}

struct Context {
  const RunConfig& config;
  std::optional<QuotientGraph> graph;
  std::optional<ZetaReport> zeta;
  double zeta_ms = 0;

  const QuotientGraph& quotient() {
    if (!graph) {
      GraphOptions opts;
      opts.max_vertices = config.limits.max_vertices;
      graph = build_graph(config.translation, opts);
      if (config.perturbation) {
        const auto& p = *config.perturbation;
        perturb_adjacency(*graph, p.type, p.row, p.col, p.delta);
      }
    }
    return *graph;
  }

  const ZetaReport& zeta_report() {
    if (!zeta) {
      auto start = Clock::now();
      zeta = cross_check_zeta(config.translation, quotient(), config.max_degree, config.tolerance, config.engine);
      zeta_ms = elapsed_ms(start);
    }
    return *zeta;
  }

  EnumerationCaps caps() const { return {config.limits.max_box_points}; }
};

Json check_positive_zeta(Context& ctx) {
  const auto& z = ctx.zeta_report();
  Json j = to_json(z);
  const bool roots_ok = z.roots.max_modulus_deviation < 1e-8;
  Json out{{"determinant", j["determinant"]},
           {"orders_product", j["orders_product"]},
           {"orders", j["orders"]},
           {"determinant_engine", j["determinant_engine"]},
           {"roots", j["roots"]},
           {"det_equals_orders", z.det_equals_orders},
           {"degree_and_ends", z.degree_and_ends_ok},
           {"pass", z.det_equals_orders && z.degree_and_ends_ok && roots_ok}};
  return out;
}

Json check_lfunction(Context& ctx) {
  const auto& z = ctx.zeta_report();
  return {{"polynomial", to_json(z.lfunction.poly)},
          {"max_deviation", z.lfunction.max_deviation},
          {"tolerance", ctx.config.tolerance},
          {"precision_bits", z.lfunction.precision_bits},
          {"equals_determinant", z.lfunction_equals_det},
          {"equals_orders_product", z.lfunction.poly == z.by_orders},
          {"pass", z.lfunction_equals_det && z.lfunction_within_tolerance}};
}

Json check_geodesic_oracle(Context& ctx) {
  const auto& z = ctx.zeta_report();
  return {{"max_degree", z.max_degree},
          {"euler_product", to_json(z.euler)},
          {"determinant_truncated", to_json(z.det_truncated)},
          {"class_counts", to_json(z.class_counts)},
          {"expected_class_counts", to_json(z.expected_counts)},
          {"euler_matches", z.euler_matches},
          {"class_counts_match", z.counts_match},
          {"pass", z.euler_matches && z.counts_match}};
}

Json check_ihara(Context& ctx) {
  const auto& g = ctx.quotient();
  const auto r = ihara_bass(g, ctx.config.engine);
  const auto D = static_cast<std::size_t>(ctx.config.max_degree);
  const Int chi_expected = g.N * (2 - (Int{1} << (g.n - 1)));
  const IntPolynomial divided = ihara_series(r, D);
  Json out{{"numerator", to_json(r.numerator)},
           {"chi", r.chi},
           {"series_over_power_chi", to_json(divided)},
           {"series_times_power_chi", to_json(ihara_series(r, D, true))}};
  bool pass = r.chi == chi_expected && r.numerator.degree() == 2 * g.N && r.numerator.coefficient(0) == 1;
  Json oracle;
  const Int L = cycle_oracle_degree(g, ctx.config.max_degree);
  try {
    const auto cycles = enumerate_backtrackless_cycles(g, L);
    std::vector<Int> lengths;
    for (const auto& c : cycles) lengths.push_back(static_cast<Int>(c.vertices.size()));
    const IntPolynomial euler = euler_product_truncation(lengths, static_cast<std::size_t>(L));
    const bool match = euler == divided.truncated(static_cast<std::size_t>(L));
    oracle = {{"status", "ran"},
              {"degree", L},
              {"classes", cycles.size()},
              {"euler_product", to_json(euler)},
              {"matches", match}};
    pass = pass && match;
  } catch (const InvalidInput& e) {
    oracle = {{"status", std::string("skipped: ") + e.what()}};
  }
  out["cycle_oracle"] = oracle;
  out["pass"] = pass;
  return out;
}

Json check_selberg_series(Context& ctx) {
  const auto& c = ctx.config;
  if (c.kind == "affine") {
    const auto classes = enumerate_classes_affine(c.affine, c.max_degree, c.scale, ctx.caps());
    MultiSeries s(c.n - 1, c.max_degree);
    Json list = Json::array();
    bool positive = true;
    for (const auto& k : classes) {
      s.add(*k.lengths.exponents(), mpz_class(static_cast<long>(k.weight)));
      positive = positive && k.weight >= 1;
      list.push_back({{"representative", to_json(k.representative)},
                      {"weight", k.weight},
                      {"lengths", to_json(k.lengths)}});
    }
    const Int identity_weight = c.affine.index_in_G();
    Int found = 0;
    for (const auto& k : classes)
      if (k.representative == AffineElement::identity(c.n)) found = k.weight;
    return {{"series", to_json(s)},
            {"classes", list},
            {"index_in_G", identity_weight},
            {"identity_weight", found},
            {"pass", positive && found == identity_weight}};
  }
  const auto s = selberg_series_translation(c.translation, c.max_degree, c.scale, ctx.caps());
  const mpz_class expected = static_cast<long>(checked_mul(factorial(c.n), c.translation.index()));
  const mpz_class constant = s.coefficient(ExpVec(c.n - 1, 0));
  return {{"series", to_json(s)},
          {"scale", to_string(c.scale)},
          {"constant_term", constant.get_str()},
          {"pass", constant == expected}};
}

Json check_selberg_rational(Context& ctx) {
  const auto& c = ctx.config;
  const auto r = selberg_rational_translation(c.translation, c.scale);
  const auto expanded = r.expand(c.max_degree);
  const auto series = selberg_series_translation(c.translation, c.max_degree, c.scale, ctx.caps());
  const auto poles = check_poles(r);
  const bool equal = expanded == series;
  return {{"rational", to_json(r)},
          {"expansion_matches_series", equal},
          {"poles",
           {{"factors", poles.factors},
            {"univariate_factors", poles.univariate_factors},
            {"max_modulus_deviation", poles.max_modulus_deviation}}},
          {"pass", equal && poles.univariate_factors && poles.max_modulus_deviation < 1e-9}};
}

Json check_comparison(Context& ctx) {
  const auto& c = ctx.config;
  const auto r = comparison_check(c.translation, std::max(1, c.max_degree), zeta_positive_orders(c.translation));
  Json j = to_json(r);
  j["pass"] = r.corrected_holds;
  return j;
}

Json check_invariants(Context& ctx) {
  const auto& c = ctx.config;
  Json out;
  bool pass = true;
  if (c.kind == "affine") {
    const auto classes = enumerate_classes_affine(c.affine, 0, LengthScale::factorial, ctx.caps());
    Int identity = 0;
    bool positive = true;
    for (const auto& k : classes) {
      positive = positive && k.weight >= 1;
      if (k.representative == AffineElement::identity(c.n)) identity = k.weight;
    }
    out["identity_weight_is_index"] = identity == c.affine.index_in_G();
    out["weights_positive"] = positive;
    out["pass"] = identity == c.affine.index_in_G() && positive;
    return out;
  }
  const auto& g = ctx.quotient();
  bool sums = true, transpose = true;
  for (int i = 1; i < g.n; ++i) {
    const auto& a = g.typed_adjacency(i);
    for (auto s : a.row_sums()) sums = sums && s == binomial(g.n, i);
    for (auto s : a.column_sums()) sums = sums && s == binomial(g.n, i);
    transpose = transpose && a.transpose() == g.typed_adjacency(g.n - i);
  }
  out["row_and_column_sums"] = sums;
  out["transpose_symmetry"] = transpose;
  pass = sums && transpose;
  if (g.N <= 512) {
    bool commute = true;
    for (int i = 1; i < g.n; ++i)
      for (int k = i + 1; k < g.n; ++k)
        commute = commute && g.typed_adjacency(i) * g.typed_adjacency(k) == g.typed_adjacency(k) * g.typed_adjacency(i);
    out["operators_commute"] = commute;
    pass = pass && commute;
  } else {
    out["operators_commute"] = "skipped: N > 512";
  }
  Int product = 1;
  for (Int d : g.group.divisors()) product *= d;
  out["elementary_divisors"] = to_json(g.group.divisors());
  out["divisor_product_is_index"] = product == g.N;
  bool satake = true;
  for (const auto& chi : characters(g.group)) {
    Turn t;
    for (const auto& s : chi.satake(g.group)) t = t + s;
    satake = satake && t.is_zero();
  }
  out["satake_products_trivial"] = satake;
  pass = pass && product == g.N && satake;
  out["pass"] = pass;
  return out;
}

const std::map<std::string, std::function<Json(Context&)>>& check_table() {
  static const std::map<std::string, std::function<Json(Context&)>> table{
      {"comparison", check_comparison},       {"geodesic_oracle", check_geodesic_oracle},
      {"ihara", check_ihara},                 {"invariants", check_invariants},
      {"lfunction", check_lfunction},         {"positive_zeta", check_positive_zeta},
      {"selberg_rational", check_selberg_rational}, {"selberg_series", check_selberg_series},
  };
  return table;
}

}  // namespace

RunOutcome run(const RunConfig& config) {
  RunOutcome out;
  const auto start = Clock::now();
  Json checks = Json::object();
  Json failed = Json::array();
  Context ctx{config, {}, {}, 0};
  try {
    for (const auto& name : config.checks) {
      const auto t0 = Clock::now();
      Json section;
      try {
        section = check_table().at(name)(ctx);
      } catch (const NumericalFailure& e) {
        section = {{"pass", false}, {"error", e.what()}};
      } catch (const Divergence& e) {
        section = {{"pass", false}, {"error", e.what()}};
      }
      section["timing_ms"] = elapsed_ms(t0);
      if (!section["pass"].get<bool>()) failed.push_back(name);
      checks[name] = section;
    }
    out.exit_code = failed.empty() ? exit_ok : exit_failed;
  } catch (const ResourceLimit& e) {
    out.exit_code = exit_resource;
    out.report["error"] = e.what();
  } catch (const InvalidInput& e) {
    out.exit_code = exit_invalid_config;
    out.report["error"] = e.what();
  }
  out.report["config"] = config_to_json(config);
  out.report["checks"] = checks;
  out.report["failed"] = failed;
  out.report["exit_code"] = out.exit_code;
  out.report["timing_ms"] = {{"total", elapsed_ms(start)}, {"zeta_methods", ctx.zeta_ms}};
  return out;
}

std::string summarize(const Json& report) {
  std::ostringstream os;
  auto one = [&](const Json& r) {
    const Json& c = r["config"];
    os << "n=" << c["n"].get<int>() << " " << c["gamma"]["kind"].get<std::string>();
    if (c.contains("label")) os << " [" << c["label"].get<std::string>() << "]";
    os << "\n";
    if (r.contains("error")) os << "  error: " << r["error"].get<std::string>() << "\n";
    for (const auto& [name, section] : r["checks"].items()) {
      os << "  " << name << ": " << (section["pass"].get<bool>() ? "PASS" : "FAIL");
      if (section.contains("error")) os << " (" << section["error"].get<std::string>() << ")";
      os << "\n";
    }
    os << "  exit code " << r["exit_code"].get<int>() << "\n";
  };
  if (report.contains("panel")) {
    for (const auto& r : report["panel"]) one(r);
    os << "panel exit code " << report["exit_code"].get<int>() << "\n";
  } else {
    one(report);
  }
  return os.str();
}

Json strip_timings(Json report) {
  if (report.is_object()) {
    report.erase("timing_ms");
    for (auto& [k, v] : report.items()) v = strip_timings(v);
  } else if (report.is_array()) {
    for (auto& v : report) v = strip_timings(v);
  }
  return report;
}

}  // namespace f1zeta::cli
