#include <algorithm>

#include "f1zeta/cli.hpp"

namespace f1zeta::cli {

namespace {

RunConfig translation(int n, std::vector<IntVec> gens, const std::string& label) {
  RunConfig c;
  c.n = n;
  c.kind = "translation";
  c.translation = {n, std::move(gens)};
  c.max_degree = 12;
  c.checks = all_checks();
  c.label = label;
  return c;
}

}  // namespace

std::vector<RunConfig> demo_panel(bool perturb) {
  std::vector<RunConfig> panel{
      translation(2, {{2}}, "2Z"),
      translation(2, {{4}}, "4Z"),
      translation(2, {{6}}, "6Z"),
      translation(2, {{10}}, "10Z"),
      translation(3, {{1, -1}, {0, 3}}, "type-zero sublattice, N=3"),
      translation(3, {{3, 0}, {0, 3}}, "diag(3,3)"),
      translation(3, {{3, 0}, {0, 6}}, "diag(3,6)"),
      translation(3, {{1, 2}, {0, 6}}, "N=6"),
      translation(4, {{1, -1, 0}, {0, 1, -1}, {0, 0, 4}}, "N=4"),
      translation(4, {{1, -1, 0}, {0, 1, -1}, {0, 0, 8}}, "N=8"),
      translation(4, {{2, 2, 0}, {0, 2, 2}, {0, 0, 4}}, "N=16"),
      translation(4, {{4, 0, 0}, {0, 4, 0}, {0, 0, 4}}, "diag(4,4,4)"),
  };
  if (perturb) panel.front().perturbation = Perturbation{1, 0, 0, 1};
  return panel;
}

RunOutcome demo_suite(bool perturb) {
  RunOutcome out;
  Json reports = Json::array();
  for (const auto& c : demo_panel(perturb)) {
    auto r = run(c);
    out.exit_code = std::max(out.exit_code, r.exit_code);
    reports.push_back(std::move(r.report));
  }
  out.report = {{"panel", reports}, {"exit_code", out.exit_code}};
  return out;
}

}  // namespace f1zeta::cli
