#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "resumkit/graph.hpp"
#include "resumkit/rational.hpp"
#include "resumkit/sampling.hpp"

namespace resumkit {

/// An ordering (permutation) of all edge labels of a graph.
using Sector = std::vector<std::string>;

/// Spanning tree plus the order in which the greedy sweep picked its edges.
struct OrderedTree {
  SpanningTree tree;
  std::vector<std::string> pick_order;
};

/// w(G,T) = N(G,T) / |E|! where N counts the sectors whose leading tree is T.
struct ConstructiveWeight {
  Rational value;
  BigInt sector_count;
  BigInt total_sectors;

  bool operator==(const ConstructiveWeight& other) const {
    return value == other.value && sector_count == other.sector_count &&
           total_sectors == other.total_sectors;
  }
};

struct WeightCaps {
  int brute_force_max_edges = 9;
  int symbolic_max_tree_edges = 9;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Greedy sweep over the sector: self-loops and cycle-creating edges are
/// skipped, everything else is picked. The result minimizes the total sector
/// position over all spanning trees.
OrderedTree kruskal_leading_tree(const Multigraph& g, const Sector& s);

/// Exact N(G,T) by enumerating all |E|! sectors.
ConstructiveWeight weight_bruteforce(const Multigraph& g, const SpanningTree& t,
                                     const WeightCaps& caps = {});

/// Memo cache for the deletion-contraction recursion, keyed on the canonical
/// form of the (graph, tree) pair. Not thread-safe; use one per worker.
struct DcMemo {
  std::map<std::string, BigInt> table;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
};

/// N(G,T) via N(G,T) = sum_{e in T} N(G/e, T/e) + sum_{self-loops e} N(G-e, T),
/// with N = 1 for the edgeless single-vertex graph.
ConstructiveWeight weight_deletion_contraction(const Multigraph& g, const SpanningTree& t,
                                               DcMemo* memo = nullptr);

/// Exact value of the ordered integral over 0 < x_1 < ... < x_n < 1 of
/// prod_k x_k^{c_k}, which is prod_k 1 / (c_1 + ... + c_k + k).
Rational simplex_monomial_integral(const std::vector<unsigned>& exponents);

/// Exact evaluation of the weight integral: sum over all orderings of the
/// tree-edge variables, each contributing one ordered monomial integral.
ConstructiveWeight weight_symbolic(const Multigraph& g, const SpanningTree& t,
                                   const WeightCaps& caps = {});

/// Uniform sampling of the weakening parameters; averages the product of
/// path minima over non-tree edges. Reproducible for a given seed.
McEstimate weight_monte_carlo(const Multigraph& g, const SpanningTree& t, std::uint64_t samples,
                              std::uint64_t seed, int threads = 1);

/// All spanning trees, in lexicographic edge-index order, no duplicates.
std::vector<SpanningTree> enumerate_spanning_trees(const Multigraph& g);

enum class WeightMethod { brute, dc, symbolic, mc };

WeightMethod parse_weight_method(const std::string& name);
std::string weight_method_name(WeightMethod m);

/// Key is the comma-joined sorted edge labels of the tree.
std::string tree_key(const SpanningTree& t);

/// Exact weight table over every spanning tree; the values sum to exactly 1.
std::map<std::string, ConstructiveWeight> weight_table(const Multigraph& g, WeightMethod method,
                                                       const WeightCaps& caps = {},
                                                       int threads = 1);

std::map<std::string, McEstimate> weight_table_mc(const Multigraph& g, std::uint64_t samples,
                                                  std::uint64_t seed, int threads = 1);

/// All sectors whose leading tree is t (brute-force sizes only).
std::vector<Sector> sectors_for_tree(const Multigraph& g, const SpanningTree& t,
                                     const WeightCaps& caps = {});

}  // namespace resumkit
