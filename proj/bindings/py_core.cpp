#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "resumkit/io.hpp"
#include "resumkit/phi4.hpp"
#include "resumkit/positivity.hpp"
#include "resumkit/symanzik.hpp"
#include "resumkit/tree_weights.hpp"

namespace py = pybind11;
using namespace resumkit;

namespace {

Multigraph graph_arg(const std::string& graph_json) {
  return graph_from_json(Json::parse(graph_json));
}

std::map<std::string, Rational> fraction_map(const std::map<std::string, std::string>& raw) {
  std::map<std::string, Rational> out;
  for (const auto& [key, value] : raw) out[key] = parse_fraction(value);
  return out;
}

using WeightRow = std::tuple<std::string, std::string, std::string>;

WeightRow weight_row(const ConstructiveWeight& w) {
  return {fraction_str(w.value), w.sector_count.str(), w.total_sectors.str()};
}

py::dict series_dict(const phi4::AmplitudeSeries& s) {
  py::dict out;
  for (const auto& [order, coeff] : s) out[py::int_(order)] = fraction_str(coeff);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact constructive weights, forest-formula positivity, Symanzik "
            "polynomials and the zero-dimensional loop vertex expansion. "
            "Graphs are JSON strings {\"vertices\": [...], \"edges\": "
            "[{\"id\", \"ends\"}]}; exact rationals cross the boundary as "
            "\"num/den\" strings (fractions.Fraction parses them).";

  m.def(
      "weight",
      [](const std::string& graph_json, const std::vector<std::string>& tree,
         const std::string& method) {
        const Multigraph g = graph_arg(graph_json);
        const WeightMethod wm = parse_weight_method(method);
        ConstructiveWeight w;
        if (wm == WeightMethod::brute)
          w = weight_bruteforce(g, tree);
        else if (wm == WeightMethod::dc)
          w = weight_deletion_contraction(g, tree);
        else if (wm == WeightMethod::symbolic)
          w = weight_symbolic(g, tree);
        else
          throw std::invalid_argument("weight: use weight_mc_table for the mc method");
        return weight_row(w);
      },
      py::arg("graph_json"), py::arg("tree"), py::arg("method") = "dc",
      "w(G,T) as (\"num/den\", sector_count, total_sectors).");

  m.def(
      "weight_table",
      [](const std::string& graph_json, const std::string& method, int threads) {
        std::map<std::string, WeightRow> out;
        for (const auto& [key, w] :
             weight_table(graph_arg(graph_json), parse_weight_method(method), {}, threads))
          out[key] = weight_row(w);
        return out;
      },
      py::arg("graph_json"), py::arg("method") = "dc", py::arg("threads") = 1,
      "Exact weights for every spanning tree, keyed by sorted edge labels.");

  m.def(
      "weight_mc_table",
      [](const std::string& graph_json, std::uint64_t samples, std::uint64_t seed, int threads) {
        std::map<std::string, std::pair<double, double>> out;
        for (const auto& [key, est] :
             weight_table_mc(graph_arg(graph_json), samples, seed, threads))
          out[key] = {est.estimate, est.std_error};
        return out;
      },
      py::arg("graph_json"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 1,
      "Seeded Monte-Carlo weight estimates (estimate, std_error) per tree.");

  m.def(
      "spanning_trees",
      [](const std::string& graph_json) {
        return enumerate_spanning_trees(graph_arg(graph_json));
      },
      py::arg("graph_json"));

  m.def(
      "sectors",
      [](const std::string& graph_json, const std::vector<std::string>& tree) {
        return sectors_for_tree(graph_arg(graph_json), tree);
      },
      py::arg("graph_json"), py::arg("tree"),
      "All edge orderings whose greedy leading tree is the given tree.");

  m.def(
      "kruskal",
      [](const std::string& graph_json, const std::vector<std::string>& sector) {
        const OrderedTree ot = kruskal_leading_tree(graph_arg(graph_json), sector);
        return std::make_pair(ot.tree, ot.pick_order);
      },
      py::arg("graph_json"), py::arg("sector"),
      "(leading tree, pick order) for one edge ordering.");

  m.def(
      "canonical_key",
      [](const std::string& graph_json, const std::vector<std::string>& tree) {
        return canonical_key(graph_arg(graph_json), tree);
      },
      py::arg("graph_json"), py::arg("tree") = std::vector<std::string>{},
      "Isomorphism-invariant key of the graph with an optional marked tree.");

  m.def(
      "psd_check",
      [](const std::string& graph_json, const std::vector<std::string>& tree,
         const std::map<std::string, std::string>& w) {
        const Multigraph g = graph_arg(graph_json);
        const SpanningTree t = normalized_tree(tree);
        const WeakeningVector wv = fraction_map(w);
        const WeakeningMatrix matrix = build_weakening_matrix(g, t, wv);
        const PsdReport report = check_psd(matrix);
        const BlockPartition bp = block_decomposition(g, t, wv);
        const WeakeningMatrix rebuilt = reconstruct_from_blocks(bp, g.vertices());

        py::dict out;
        out["psd"] = report.psd;
        out["min_eigenvalue"] = report.min_eigenvalue;
        out["vertices"] = matrix.vertices;
        py::list rows;
        for (const auto& row : matrix.entries) {
          py::list r;
          for (const Rational& v : row) r.append(fraction_str(v));
          rows.append(std::move(r));
        }
        out["matrix"] = std::move(rows);
        out["sigma_order"] = bp.sigma_order;
        py::list coeffs;
        for (const Rational& c : bp.coefficients) coeffs.append(fraction_str(c));
        out["coefficients"] = std::move(coeffs);
        out["partitions"] = bp.partitions;
        out["exact_reconstruction"] = rebuilt.entries == matrix.entries;
        return out;
      },
      py::arg("graph_json"), py::arg("tree"), py::arg("w"),
      "Weakening matrix, PSD report and exact barycentric block decomposition.");

  m.def(
      "symanzik",
      [](const std::string& graph_json) {
        const Multigraph g = graph_arg(graph_json);
        const SymanzikPolynomial u = symanzik_polynomial(g);
        std::map<std::string, Rational> at_ones;
        for (const Edge& e : g.edges()) at_ones[e.label] = 1;
        py::dict out;
        out["degree"] = u.degree;
        out["monomials"] = u.monomials;
        out["value_at_ones"] = fraction_str(u.evaluate(at_ones));
        out["matrix_tree_at_ones"] = fraction_str(spanning_tree_count_matrix_tree(g, at_ones));
        return out;
      },
      py::arg("graph_json"));

  m.def(
      "symanzik_eval",
      [](const std::string& graph_json, const std::map<std::string, std::string>& alpha,
         bool matrix_tree) {
        const Multigraph g = graph_arg(graph_json);
        const auto a = fraction_map(alpha);
        const Rational value =
            matrix_tree ? symanzik_eval_matrix_tree(g, a) : symanzik_polynomial(g).evaluate(a);
        return fraction_str(value);
      },
      py::arg("graph_json"), py::arg("alpha"), py::arg("matrix_tree") = false,
      "U_G at exact rational alpha, directly or through the matrix-tree cofactor.");

  m.def(
      "amplitude",
      [](const std::string& graph_json, double dimension, double mass, std::uint64_t samples,
         std::uint64_t seed, bool sector_decomposed, int threads) {
        const Multigraph g = graph_arg(graph_json);
        const ModelParams params{dimension, mass, 0.0};
        const McEstimate est =
            sector_decomposed
                ? amplitude_sector_decomposed(g, params, samples, seed, threads)
                : amplitude_parametric(g, params, samples, seed, threads);
        return std::make_pair(est.estimate, est.std_error);
      },
      py::arg("graph_json"), py::arg("dimension"), py::arg("mass"), py::arg("samples"),
      py::arg("seed"), py::arg("sector_decomposed") = false, py::arg("threads") = 1,
      "Seeded parametric amplitude estimate (estimate, std_error), 0 <= D < 2.");

  m.def(
      "logz_oracle",
      [](unsigned max_order) { return series_dict(phi4::logz_oracle(max_order)); },
      py::arg("max_order"), "Exact log Z coefficients of the quartic vacuum model.");

  m.def(
      "lve_repack",
      [](unsigned order, int threads) {
        const phi4::LveResult r = phi4::lve_repack(order, 3, threads);
        py::dict shapes, pairs;
        for (const auto& [key, series] : r.by_tree_shape)
          shapes[py::str(key)] = series_dict(series);
        for (const auto& [key, series] : r.by_pair) pairs[py::str(key)] = series_dict(series);
        py::dict out;
        out["totals"] = series_dict(r.totals);
        out["oracle"] = series_dict(r.oracle);
        out["match"] = r.totals == r.oracle;
        out["by_tree_shape"] = std::move(shapes);
        out["by_pair"] = std::move(pairs);
        return out;
      },
      py::arg("order"), py::arg("threads") = 1,
      "Tree-repacked vacuum amplitudes versus the log Z oracle, exact.");

  m.def(
      "selftest",
      [] {
        RunConfig cfg;
        cfg.command = "selftest";
        return run(cfg).dump(2);
      },
      "JSON report of the built-in oracle battery.");
}
