#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "f1zeta/cayley.hpp"
#include "f1zeta/cli.hpp"
#include "f1zeta/error.hpp"

namespace {

using namespace f1zeta;

int emit(const cli::RunOutcome& outcome, const std::string& out_path, const std::string& format) {
  const std::string body = format == "text" ? cli::summarize(outcome.report) : outcome.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream os(out_path);
    if (!os) {
      std::cerr << "cannot write " << out_path << "\n";
      return cli::exit_invalid_config;
    }
    os << body;
    if (format != "text") std::cout << cli::summarize(outcome.report);
  }
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta functions of quotients of the apartment graph"};
  app.require_subcommand(1);

  std::string config_path, out_path, format = "json";
  auto* run = app.add_subcommand("run", "Run the checks listed in a configuration file");
  run->add_option("--config", config_path, "Configuration JSON")->required();
  run->add_option("--out", out_path, "Write the report here instead of stdout");
  run->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  bool perturb = false;
  std::string demo_out, demo_format = "text";
  auto* demo = app.add_subcommand("demo", "Run the built-in panel");
  demo->add_flag("--perturb", perturb, "Inject a unit adjacency perturbation (negative control)");
  demo->add_option("--out", demo_out, "Write the report here");
  demo->add_option("--format", demo_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string graph_config, graph_out;
  auto* exp = app.add_subcommand("export-graph", "Write the quotient graph as an edge list");
  exp->add_option("--config", graph_config, "Configuration JSON")->required();
  exp->add_option("--out", graph_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : cli::exit_invalid_config;
  }

  try {
    if (*run) return emit(cli::run(cli::load_config(config_path)), out_path, format);
    if (*demo) return emit(cli::demo_suite(perturb), demo_out, demo_format);
    if (*exp) {
      const auto config = cli::load_config(graph_config);
      if (config.kind != "translation") throw cli::ConfigError("gamma.kind", "export-graph needs a translation group");
      GraphOptions opts;
      opts.max_vertices = config.limits.max_vertices;
      const auto g = build_graph(config.translation, opts);
      if (graph_out.empty()) {
        write_edge_list(std::cout, g);
      } else {
        std::ofstream os(graph_out);
        write_edge_list(os, g);
      }
      return cli::exit_ok;
    }
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return cli::exit_resource;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return cli::exit_invalid_config;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_failed;
  }
  return cli::exit_ok;
}
