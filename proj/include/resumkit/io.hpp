#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "resumkit/graph.hpp"
#include "resumkit/rational.hpp"
#include "resumkit/tree_weights.hpp"

namespace resumkit {

using Json = nlohmann::ordered_json;

/// Schema: {"vertices": ["A", ...], "edges": [{"id": "l1", "ends": ["A","B"]}, ...]}.
/// Distinct diagnostics for parse errors, duplicate labels, dangling endpoints.
Multigraph load_graph(const std::string& path);
Multigraph graph_from_json(const Json& doc);
Json graph_to_json(const Multigraph& g);

struct RunConfig {
  std::string command;      // weights|sectors|psd-check|symanzik|amplitude|phi4-lve|selftest
  std::string input_path;   // graph commands
  std::string method = "dc";
  std::vector<std::string> tree;       // sectors, psd-check
  std::map<std::string, Rational> w;   // psd-check explicit parameters
  double dimension = 1.0;
  double mass = 1.0;
  bool sector_decomposed = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool has_seed = false;    // seeds are mandatory wherever sampling happens
  unsigned order = 2;       // phi4-lve
  std::string lambda;       // optional coupling for numeric evaluation, exact
  WeightCaps caps;
  unsigned vacuum_order_cap = 3;
  int threads = 1;
  std::string format = "json";
};

/// Dispatches to the module operations. Identical config gives byte-identical
/// output. Cap and validation failures throw; the CLI turns them into
/// diagnostics and a nonzero exit.
Json run(const RunConfig& cfg);

/// "json": pretty-printed document. "csv": tabular payload rendering.
std::string render(const Json& doc, const std::string& format);

}  // namespace resumkit
