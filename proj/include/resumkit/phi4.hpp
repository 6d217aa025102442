#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "resumkit/graph.hpp"
#include "resumkit/rational.hpp"

namespace resumkit::phi4 {

/// Half-edge h belongs to vertex h / 4; vertex v carries half-edges 4v..4v+3.
/// A vacuum graph of order n is a perfect matching of the 4n half-edges.
struct VacuumGraph {
  unsigned order = 0;
  std::vector<std::pair<int, int>> matching;  // (a, b) with a < b, sorted by a
  Multigraph graph;                           // vertices v1..vn, edges e1..e2n

  /// Coefficient of lambda^order carried by this labeled matching:
  /// (-1/2)^order / order! for the interaction exp(-lambda phi^4 / 2).
  Rational amplitude() const;
};

/// All (4n-1)!! perfect matchings. Throws CapExceeded-style runtime_error
/// past the cap.
std::vector<VacuumGraph> generate_vacuum_graphs(unsigned n, unsigned cap = 3);

/// One of the three ways to split a vertex's four half-edges into two pairs:
/// choice 0 = {0,1}{2,3}, 1 = {0,2}{1,3}, 2 = {0,3}{1,2} (local half-edge ids).
/// Each pair becomes a corner; vertex v yields corners 2v and 2v+1.
struct ExtendedGraph {
  unsigned order = 0;
  std::vector<int> pairing_choice;               // size order, entries in {0,1,2}
  std::vector<std::pair<int, int>> solid_edges;  // 2n edges between corners
  std::vector<std::pair<int, int>> dotted_edges; // n edges: (2v, 2v+1) per vertex
  Rational amplitude;                            // 3^{-n} * base amplitude
};

/// Exactly 3^n extensions; their amplitudes sum back to g.amplitude().
std::vector<ExtendedGraph> extensions(const VacuumGraph& g);

/// Solid cycles become bold vertices b1..bk; dotted edges d1..dn survive.
struct CollapsedGraph {
  Multigraph graph;
  std::size_t cycle_count = 0;
  Rational amplitude;
  unsigned order = 0;
};

/// Throws logic_error when the solid edges fail to be vertex-disjoint cycles.
CollapsedGraph collapse(const ExtendedGraph& e);

/// order -> exact coefficient of lambda^order.
using AmplitudeSeries = std::map<unsigned, Rational>;

/// Exact coefficients z_0..z_max of Z = sum (-lambda/2)^n (4n-1)!! / n!.
std::vector<Rational> z_coefficients(unsigned max_order);

/// Formal-series log of Z; order n coefficient of log Z, exact.
AmplitudeSeries logz_oracle(unsigned max_order);

struct LveResult {
  /// Keyed by the canonical shape of the collapsed spanning tree alone.
  std::map<std::string, AmplitudeSeries> by_tree_shape;
  /// Transparency table keyed by the canonical (collapsed graph, tree) pair.
  std::map<std::string, AmplitudeSeries> by_pair;
  AmplitudeSeries totals;  // per-order sums over all trees
  AmplitudeSeries oracle;  // logz_oracle truncation, for comparison
};

/// Repacks w(collapsed, tree) * amplitude over every connected collapsed
/// graph of order <= max_order. totals must equal oracle order by order.
LveResult lve_repack(unsigned max_order, unsigned cap = 3, int threads = 1);

/// Evaluates a truncated series at a coupling value, exactly.
Rational series_eval(const AmplitudeSeries& s, const Rational& lambda);

}  // namespace resumkit::phi4
