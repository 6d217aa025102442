#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "resumkit/io.hpp"
#include "resumkit/sampling.hpp"

namespace {

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::string token;
  for (const char c : csv) {
    if (c == ',') {
      if (!token.empty()) out.push_back(token);
      token.clear();
    } else {
      token += c;
    }
  }
  if (!token.empty()) out.push_back(token);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructive weights, forest-formula positivity, Symanzik "
               "polynomials, and the zero-dimensional phi^4 loop vertex expansion"};
  app.require_subcommand(1);

  resumkit::RunConfig cfg;
  int threads = 0;  // 0 = RESUMKIT_THREADS, else 1
  std::string tree_csv, w_csv;
  app.add_option("--threads", threads, "Worker threads (default: RESUMKIT_THREADS or 1)");
  app.add_option("--format", cfg.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto add_graph_arg = [&](CLI::App* cmd) {
    cmd->add_option("graph", cfg.input_path, "Graph JSON file")->required();
  };
  auto add_sampling = [&](CLI::App* cmd, bool required) {
    auto* samples = cmd->add_option("--samples", cfg.samples, "Sample count");
    auto* seed = cmd->add_option("--seed", cfg.seed, "RNG seed (mandatory when sampling)");
    if (required) {
      samples->required();
      seed->required();
    }
    return std::pair{samples, seed};
  };

  CLI::App* weights = app.add_subcommand("weights", "Exact or Monte-Carlo weight table");
  add_graph_arg(weights);
  weights->add_option("--method", cfg.method, "brute | dc | symbolic | mc")
      ->check(CLI::IsMember({"brute", "dc", "symbolic", "mc"}));
  add_sampling(weights, false);

  CLI::App* sectors = app.add_subcommand("sectors", "Hepp sectors whose leading tree is --tree");
  add_graph_arg(sectors);
  sectors->add_option("--tree", tree_csv, "Comma-separated tree edge labels")->required();

  CLI::App* psd = app.add_subcommand("psd-check", "Weakening-matrix PSD and block decomposition");
  add_graph_arg(psd);
  psd->add_option("--tree", tree_csv, "Comma-separated tree edge labels")->required();
  psd->add_option("--w", w_csv, "Explicit parameters, e.g. l1=0.5,l2=3/10");
  add_sampling(psd, false);

  CLI::App* symanzik = app.add_subcommand("symanzik", "Kirchhoff-Symanzik polynomial");
  add_graph_arg(symanzik);

  CLI::App* amplitude = app.add_subcommand("amplitude", "Parametric amplitude at 0 <= D < 2");
  add_graph_arg(amplitude);
  amplitude->add_option("--dim", cfg.dimension, "Spacetime dimension D in [0,2)");
  amplitude->add_option("--mass", cfg.mass, "Mass m > 0");
  amplitude->add_flag("--sector-decomposed", cfg.sector_decomposed,
                      "Sum the integral over Hepp sectors");
  add_sampling(amplitude, true);

  CLI::App* phi4 = app.add_subcommand("phi4-lve", "phi^4 loop vertex expansion bookkeeping");
  phi4->add_option("--order", cfg.order, "Max perturbative order");
  phi4->add_option("--lambda", cfg.lambda, "Optional coupling for numeric evaluation");
  phi4->add_option("--order-cap", cfg.vacuum_order_cap, "Vacuum order cap");

  CLI::App* selftest = app.add_subcommand("selftest", "Run the built-in check battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.threads = resumkit::resolve_thread_count(threads);
  cfg.tree = split_labels(tree_csv);
  cfg.has_seed = weights->count("--seed") || psd->count("--seed") || amplitude->count("--seed");
  try {
    for (const std::string& item : split_labels(w_csv)) {
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--w entries must look like label=value: " + item);
      cfg.w[item.substr(0, eq)] = resumkit::parse_fraction(item.substr(eq + 1));
    }
    const resumkit::Json doc = resumkit::run(cfg);
    std::cout << resumkit::render(doc, cfg.format);
    if (cfg.command == "selftest" && !doc["payload"]["all_pass"].get<bool>()) {
      std::cerr << "selftest: some checks failed\n";
      return 1;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  (void)sectors;
  (void)symanzik;
  (void)selftest;
  return 0;
}
