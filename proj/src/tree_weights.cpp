#include "resumkit/tree_weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace resumkit {

namespace {

struct IndexedView {
  std::vector<std::pair<std::size_t, std::size_t>> ends;  // vertex indices per edge
  std::vector<bool> loop;

  explicit IndexedView(const Multigraph& g) {
    ends.reserve(g.edge_count());
    loop.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
      ends.emplace_back(g.vertex_index(e.end_a), g.vertex_index(e.end_b));
      loop.push_back(e.is_self_loop());
    }
  }
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { reset(); }
  void reset() { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::uint64_t edge_mask(const Multigraph& g, const SpanningTree& t) {
  if (g.edge_count() > 63) throw CapExceeded("edge count exceeds bitmask range");
  std::uint64_t mask = 0;
  for (const std::string& label : t) mask |= std::uint64_t{1} << g.edge_index(label);
  return mask;
}

// Leading-tree mask for one permutation of edge indices.
std::uint64_t leading_tree_mask(const IndexedView& view, UnionFind& uf,
                                const std::vector<std::size_t>& perm) {
  uf.reset();
  std::uint64_t mask = 0;
  for (const std::size_t e : perm) {
    if (view.loop[e]) continue;
    if (uf.unite(view.ends[e].first, view.ends[e].second)) mask |= std::uint64_t{1} << e;
  }
  return mask;
}

void require_connected(const Multigraph& g, const char* op) {
  if (!g.is_connected()) throw std::invalid_argument(std::string(op) + ": graph is disconnected");
}

void require_spanning(const Multigraph& g, const SpanningTree& t, const char* op) {
  if (!is_spanning_tree(g, t))
    throw std::invalid_argument(std::string(op) + ": not a spanning tree of the graph");
}

}  // namespace

OrderedTree kruskal_leading_tree(const Multigraph& g, const Sector& s) {
  require_connected(g, "kruskal_leading_tree");
  if (s.size() != g.edge_count())
    throw std::invalid_argument("kruskal_leading_tree: sector size mismatch");
  std::set<std::string> seen;
  UnionFind uf(g.vertex_count());
  OrderedTree out;
  for (const std::string& label : s) {
    if (!seen.insert(label).second)
      throw std::invalid_argument("kruskal_leading_tree: repeated edge in sector: " + label);
    const Edge& e = g.edge(label);
    if (e.is_self_loop()) continue;
    if (uf.unite(g.vertex_index(e.end_a), g.vertex_index(e.end_b)))
      out.pick_order.push_back(label);
  }
  out.tree = normalized_tree(out.pick_order);
  return out;
}

ConstructiveWeight weight_bruteforce(const Multigraph& g, const SpanningTree& t,
                                     const WeightCaps& caps) {
  require_connected(g, "weight_bruteforce");
  require_spanning(g, t, "weight_bruteforce");
  const std::size_t E = g.edge_count();
  if (int(E) > caps.brute_force_max_edges)
    throw CapExceeded("weight_bruteforce: edge count " + std::to_string(E) +
                      " exceeds cap " + std::to_string(caps.brute_force_max_edges));

  const IndexedView view(g);
  const std::uint64_t target = edge_mask(g, t);
  UnionFind uf(g.vertex_count());
  std::vector<std::size_t> perm(E);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  BigInt count = 0;
  do {
    if (leading_tree_mask(view, uf, perm) == target) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));

  const BigInt total = factorial(unsigned(E));
  return {Rational(count, total), count, total};
}

namespace {

BigInt dc_count(const Multigraph& g, const SpanningTree& t, DcMemo& memo) {
  if (g.edge_count() == 0) return g.vertex_count() == 1 ? 1 : 0;
  const std::string key = canonical_key(g, t);
  if (const auto it = memo.table.find(key); it != memo.table.end()) {
    ++memo.hits;
    return it->second;
  }
  ++memo.misses;

  const std::set<std::string> tree_set(t.begin(), t.end());
  BigInt total = 0;
  for (const Edge& e : g.edges()) {
    if (e.is_self_loop()) {
      total += dc_count(g.delete_edge(e.label), t, memo);
    } else if (tree_set.count(e.label)) {
      SpanningTree rest;
      rest.reserve(t.size() - 1);
      for (const std::string& label : t)
        if (label != e.label) rest.push_back(label);
      total += dc_count(g.contract_edge(e.label), rest, memo);
    }
    // A non-tree, non-loop edge first in the sector would be picked by the
    // greedy sweep and land outside T, so it contributes nothing.
  }
  memo.table.emplace(key, total);
  return total;
}

}  // namespace

ConstructiveWeight weight_deletion_contraction(const Multigraph& g, const SpanningTree& t,
                                               DcMemo* memo) {
  require_connected(g, "weight_deletion_contraction");
  require_spanning(g, t, "weight_deletion_contraction");
  DcMemo local;
  DcMemo& cache = memo ? *memo : local;
  const BigInt count = dc_count(g, normalized_tree(t), cache);
  const BigInt total = factorial(unsigned(g.edge_count()));
  return {Rational(count, total), count, total};
}

Rational simplex_monomial_integral(const std::vector<unsigned>& exponents) {
  Rational value = 1;
  BigInt partial = 0;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    partial += exponents[k];
    value /= Rational(partial + BigInt(k + 1));
  }
  return value;
}

namespace {

// Tree-edge slots on the tree path of every non-tree, non-loop edge.
std::vector<std::vector<int>> non_tree_path_slots(const Multigraph& g, const SpanningTree& t) {
  std::map<std::string, int> slot_of;
  for (std::size_t k = 0; k < t.size(); ++k) slot_of[t[k]] = int(k);
  std::set<std::string> tree_set(t.begin(), t.end());
  std::vector<std::vector<int>> slots;
  for (const Edge& e : g.edges()) {
    if (tree_set.count(e.label) || e.is_self_loop()) continue;
    const TreePath path = tree_path(g, t, e.end_a, e.end_b);
    std::vector<int> s;
    s.reserve(path.size());
    for (const std::string& label : path) s.push_back(slot_of.at(label));
    slots.push_back(std::move(s));
  }
  return slots;
}

}  // namespace

ConstructiveWeight weight_symbolic(const Multigraph& g, const SpanningTree& t,
                                   const WeightCaps& caps) {
  require_connected(g, "weight_symbolic");
  require_spanning(g, t, "weight_symbolic");
  const SpanningTree tree = normalized_tree(t);
  const std::size_t k = tree.size();
  if (int(k) > caps.symbolic_max_tree_edges)
    throw CapExceeded("weight_symbolic: tree size " + std::to_string(k) + " exceeds cap " +
                      std::to_string(caps.symbolic_max_tree_edges));

  const std::vector<std::vector<int>> paths = non_tree_path_slots(g, tree);

  // Sum over the regions w_{tau(0)} < ... < w_{tau(k-1)}. Inside one region
  // every path minimum collapses to the path edge placed earliest, so the
  // integrand is a single ordered monomial.
  std::vector<int> tau(k);
  std::iota(tau.begin(), tau.end(), 0);
  std::vector<int> position(k, 0);
  std::vector<unsigned> exponents(k, 0);
  Rational value = 0;
  do {
    for (std::size_t i = 0; i < k; ++i) position[tau[i]] = int(i);
    std::fill(exponents.begin(), exponents.end(), 0u);
    for (const std::vector<int>& path : paths) {
      int lowest = int(k);
      for (const int slot : path) lowest = std::min(lowest, position[slot]);
      ++exponents[lowest];
    }
    value += simplex_monomial_integral(exponents);
  } while (std::next_permutation(tau.begin(), tau.end()));

  const BigInt total = factorial(unsigned(g.edge_count()));
  const Rational count = value * Rational(total);
  if (boost::multiprecision::denominator(count) != 1)
    throw std::logic_error("weight_symbolic: integral is not a multiple of 1/|E|!");
  return {value, boost::multiprecision::numerator(count), total};
}

McEstimate weight_monte_carlo(const Multigraph& g, const SpanningTree& t, std::uint64_t samples,
                              std::uint64_t seed, int threads) {
  require_connected(g, "weight_monte_carlo");
  require_spanning(g, t, "weight_monte_carlo");
  const SpanningTree tree = normalized_tree(t);
  const std::vector<std::vector<int>> paths = non_tree_path_slots(g, tree);
  const std::size_t k = tree.size();

  return run_chunked_mc(samples, seed, threads, [&, k](std::mt19937_64& rng) {
    std::vector<double> w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = u64_to_unit(rng());
    double product = 1.0;
    for (const std::vector<int>& path : paths) {
      double low = 1.0;
      for (const int slot : path) low = std::min(low, w[slot]);
      product *= low;
    }
    return product;
  });
}

std::vector<SpanningTree> enumerate_spanning_trees(const Multigraph& g) {
  require_connected(g, "enumerate_spanning_trees");
  const std::size_t V = g.vertex_count();
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (!g.edges()[i].is_self_loop()) candidates.push_back(i);

  std::vector<SpanningTree> trees;
  const std::size_t want = V - 1;
  if (want > candidates.size()) return trees;

  UnionFind uf(V);
  const IndexedView view(g);
  std::vector<std::size_t> picked;
  picked.reserve(want);

  // Lexicographic combinations of candidate edge indices; keep the acyclic ones.
  auto walk = [&](auto&& self, std::size_t start) -> void {
    if (picked.size() == want) {
      uf.reset();
      for (const std::size_t e : picked)
        if (!uf.unite(view.ends[e].first, view.ends[e].second)) return;
      SpanningTree t;
      t.reserve(want);
      for (const std::size_t e : picked) t.push_back(g.edges()[e].label);
      trees.push_back(normalized_tree(std::move(t)));
      return;
    }
    const std::size_t still_needed = want - picked.size();
    for (std::size_t i = start; i + still_needed <= candidates.size(); ++i) {
      picked.push_back(candidates[i]);
      self(self, i + 1);
      picked.pop_back();
    }
  };
  walk(walk, 0);
  return trees;
}

WeightMethod parse_weight_method(const std::string& name) {
  if (name == "brute") return WeightMethod::brute;
  if (name == "dc") return WeightMethod::dc;
  if (name == "symbolic") return WeightMethod::symbolic;
  if (name == "mc") return WeightMethod::mc;
  throw std::invalid_argument("unknown weight method: " + name);
}

std::string weight_method_name(WeightMethod m) {
  switch (m) {
    case WeightMethod::brute: return "brute";
    case WeightMethod::dc: return "dc";
    case WeightMethod::symbolic: return "symbolic";
    case WeightMethod::mc: return "mc";
  }
  throw std::logic_error("weight_method_name: bad enum");
}

std::string tree_key(const SpanningTree& t) {
  const SpanningTree sorted = normalized_tree(t);
  std::string key;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) key += ',';
    key += sorted[i];
  }
  return key;
}

namespace {

// Whole-table brute force: one sweep over all |E|! sectors.
std::map<std::string, ConstructiveWeight> brute_table(const Multigraph& g,
                                                      const WeightCaps& caps) {
  const std::size_t E = g.edge_count();
  if (int(E) > caps.brute_force_max_edges)
    throw CapExceeded("weight_table: edge count " + std::to_string(E) + " exceeds cap " +
                      std::to_string(caps.brute_force_max_edges));
  const IndexedView view(g);
  UnionFind uf(g.vertex_count());
  std::vector<std::size_t> perm(E);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::map<std::uint64_t, BigInt> counts;
  do {
    ++counts[leading_tree_mask(view, uf, perm)];
  } while (std::next_permutation(perm.begin(), perm.end()));

  const BigInt total = factorial(unsigned(E));
  std::map<std::string, ConstructiveWeight> table;
  for (const auto& [mask, count] : counts) {
    SpanningTree t;
    for (std::size_t e = 0; e < E; ++e)
      if (mask & (std::uint64_t{1} << e)) t.push_back(g.edges()[e].label);
    table.emplace(tree_key(t), ConstructiveWeight{Rational(count, total), count, total});
  }
  return table;
}

}  // namespace

std::map<std::string, ConstructiveWeight> weight_table(const Multigraph& g, WeightMethod method,
                                                       const WeightCaps& caps, int threads) {
  require_connected(g, "weight_table");
  if (method == WeightMethod::mc)
    throw std::invalid_argument("weight_table: use weight_table_mc for the mc method");

  std::map<std::string, ConstructiveWeight> table;
  if (method == WeightMethod::brute) {
    table = brute_table(g, caps);
  } else {
    const std::vector<SpanningTree> trees = enumerate_spanning_trees(g);
    std::vector<ConstructiveWeight> results(trees.size());
    if (method == WeightMethod::dc && threads <= 1) {
      DcMemo shared;
      for (std::size_t i = 0; i < trees.size(); ++i)
        results[i] = weight_deletion_contraction(g, trees[i], &shared);
    } else {
      parallel_for_index(trees.size(), threads, [&](std::size_t i) {
        results[i] = method == WeightMethod::dc
                         ? weight_deletion_contraction(g, trees[i], nullptr)
                         : weight_symbolic(g, trees[i], caps);
      });
    }
    for (std::size_t i = 0; i < trees.size(); ++i)
      table.emplace(tree_key(trees[i]), results[i]);
  }

  Rational sum = 0;
  for (const auto& [key, w] : table) sum += w.value;
  if (sum != 1)
    throw std::logic_error("weight_table: weights do not sum to 1 (method " +
                           weight_method_name(method) + ")");
  return table;
}

std::map<std::string, McEstimate> weight_table_mc(const Multigraph& g, std::uint64_t samples,
                                                  std::uint64_t seed, int threads) {
  require_connected(g, "weight_table_mc");
  const std::vector<SpanningTree> trees = enumerate_spanning_trees(g);
  std::map<std::string, McEstimate> table;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    // Independent stream per tree, derived from the root seed.
    table.emplace(tree_key(trees[i]),
                  weight_monte_carlo(g, trees[i], samples, stream_seed(seed, 0x7ee5 + i), threads));
  }
  return table;
}

std::vector<Sector> sectors_for_tree(const Multigraph& g, const SpanningTree& t,
                                     const WeightCaps& caps) {
  require_connected(g, "sectors_for_tree");
  require_spanning(g, t, "sectors_for_tree");
  const std::size_t E = g.edge_count();
  if (int(E) > caps.brute_force_max_edges)
    throw CapExceeded("sectors_for_tree: edge count exceeds brute-force cap");
  const IndexedView view(g);
  const std::uint64_t target = edge_mask(g, t);
  UnionFind uf(g.vertex_count());
  std::vector<std::size_t> perm(E);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Sector> sectors;
  do {
    if (leading_tree_mask(view, uf, perm) == target) {
      Sector s;
      s.reserve(E);
      for (const std::size_t e : perm) s.push_back(g.edges()[e].label);
      sectors.push_back(std::move(s));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sectors;
}

}  // namespace resumkit
