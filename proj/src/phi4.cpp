#include "resumkit/phi4.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "resumkit/tree_weights.hpp"

namespace resumkit::phi4 {

Rational VacuumGraph::amplitude() const {
  Rational half = Rational(-1, 2);
  Rational value = 1;
  for (unsigned i = 0; i < order; ++i) value *= half;
  return value / Rational(factorial(order));
}

namespace {

Multigraph matching_to_graph(unsigned n, const std::vector<std::pair<int, int>>& matching) {
  std::vector<std::string> vertices;
  vertices.reserve(n);
  for (unsigned v = 1; v <= n; ++v) vertices.push_back("v" + std::to_string(v));
  std::vector<Edge> edges;
  edges.reserve(matching.size());
  for (std::size_t k = 0; k < matching.size(); ++k) {
    edges.push_back({"e" + std::to_string(k + 1),
                     "v" + std::to_string(matching[k].first / 4 + 1),
                     "v" + std::to_string(matching[k].second / 4 + 1)});
  }
  return Multigraph(std::move(vertices), std::move(edges));
}

void all_matchings(std::vector<int>& free, std::vector<std::pair<int, int>>& current,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
  if (free.empty()) {
    out.push_back(current);
    return;
  }
  const int first = free.front();
  for (std::size_t i = 1; i < free.size(); ++i) {
    const int partner = free[i];
    std::vector<int> rest;
    rest.reserve(free.size() - 2);
    for (std::size_t j = 1; j < free.size(); ++j)
      if (j != i) rest.push_back(free[j]);
    current.emplace_back(first, partner);
    all_matchings(rest, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<VacuumGraph> generate_vacuum_graphs(unsigned n, unsigned cap) {
  if (n < 1 || n > cap)
    throw CapExceeded("generate_vacuum_graphs: order " + std::to_string(n) + " outside [1, " +
                      std::to_string(cap) + "]");
  std::vector<int> half_edges(4 * n);
  std::iota(half_edges.begin(), half_edges.end(), 0);
  std::vector<std::vector<std::pair<int, int>>> matchings;
  std::vector<std::pair<int, int>> current;
  all_matchings(half_edges, current, matchings);

  std::vector<VacuumGraph> out;
  out.reserve(matchings.size());
  for (std::vector<std::pair<int, int>>& m : matchings) {
    VacuumGraph g;
    g.order = n;
    g.graph = matching_to_graph(n, m);
    g.matching = std::move(m);
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

// Corner of half-edge h under pairing choice c of its vertex. The two local
// pairs are {0,p} and the complementary pair, with p = c + 1.
int corner_of(int h, int choice) {
  const int v = h / 4;
  const int local = h % 4;
  const int partner_of_zero = choice + 1;
  const bool first_pair = local == 0 || local == partner_of_zero;
  return 2 * v + (first_pair ? 0 : 1);
}

}  // namespace

std::vector<ExtendedGraph> extensions(const VacuumGraph& g) {
  const unsigned n = g.order;
  std::size_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= 3;

  const Rational share = g.amplitude() / Rational(BigInt(total));
  std::vector<ExtendedGraph> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    ExtendedGraph e;
    e.order = n;
    e.amplitude = share;
    e.pairing_choice.resize(n);
    std::size_t rest = code;
    for (unsigned v = 0; v < n; ++v) {
      e.pairing_choice[v] = int(rest % 3);
      rest /= 3;
    }
    e.solid_edges.reserve(g.matching.size());
    for (const auto& [a, b] : g.matching)
      e.solid_edges.emplace_back(corner_of(a, e.pairing_choice[a / 4]),
                                 corner_of(b, e.pairing_choice[b / 4]));
    e.dotted_edges.reserve(n);
    for (unsigned v = 0; v < n; ++v) e.dotted_edges.emplace_back(2 * v, 2 * v + 1);
    out.push_back(std::move(e));
  }
  return out;
}

CollapsedGraph collapse(const ExtendedGraph& e) {
  const int corners = 2 * int(e.order);

  // Disjoint cycles == every corner has solid degree exactly 2 (self-loops
  // count twice).
  std::vector<int> degree(corners, 0);
  for (const auto& [a, b] : e.solid_edges) {
    ++degree[a];
    ++degree[b];
  }
  for (const int d : degree)
    if (d != 2) throw std::logic_error("collapse: solid edges are not vertex-disjoint cycles");

  std::vector<int> comp(corners);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& [a, b] : e.solid_edges) comp[find(a)] = find(b);

  std::map<int, int> root_to_bold;
  for (int c = 0; c < corners; ++c) {
    const int root = find(c);
    if (!root_to_bold.count(root)) root_to_bold[root] = int(root_to_bold.size());
  }

  std::vector<std::string> bold;
  bold.reserve(root_to_bold.size());
  for (std::size_t k = 1; k <= root_to_bold.size(); ++k)
    bold.push_back("b" + std::to_string(k));
  std::vector<Edge> dotted;
  dotted.reserve(e.dotted_edges.size());
  for (std::size_t k = 0; k < e.dotted_edges.size(); ++k) {
    dotted.push_back({"d" + std::to_string(k + 1),
                      bold[root_to_bold[find(e.dotted_edges[k].first)]],
                      bold[root_to_bold[find(e.dotted_edges[k].second)]]});
  }

  CollapsedGraph out;
  out.cycle_count = root_to_bold.size();
  out.amplitude = e.amplitude;
  out.order = e.order;
  out.graph = Multigraph(std::move(bold), std::move(dotted));
  return out;
}

std::vector<Rational> z_coefficients(unsigned max_order) {
  std::vector<Rational> z;
  z.reserve(max_order + 1);
  for (unsigned n = 0; n <= max_order; ++n) {
    Rational c = Rational(odd_double_factorial(4 * int(n) - 1)) / Rational(factorial(n));
    for (unsigned i = 0; i < n; ++i) c *= Rational(-1, 2);
    z.push_back(c);
  }
  return z;
}

AmplitudeSeries logz_oracle(unsigned max_order) {
  const std::vector<Rational> z = z_coefficients(max_order);
  // l_n = z_n - (1/n) sum_{k=1}^{n-1} k l_k z_{n-k}, from (log Z)' Z = Z'.
  std::vector<Rational> l(max_order + 1, Rational(0));
  AmplitudeSeries out;
  for (unsigned n = 1; n <= max_order; ++n) {
    Rational acc = z[n];
    for (unsigned k = 1; k < n; ++k) acc -= Rational(BigInt(k), BigInt(n)) * l[k] * z[n - k];
    l[n] = acc;
    out[n] = acc;
  }
  return out;
}

namespace {

std::string tree_shape_key(const Multigraph& collapsed, const SpanningTree& t) {
  std::set<std::string> tree_set(t.begin(), t.end());
  std::vector<std::string> vertices = collapsed.vertices();
  std::vector<Edge> edges;
  for (const Edge& e : collapsed.edges())
    if (tree_set.count(e.label)) edges.push_back(e);
  return canonical_key(Multigraph(std::move(vertices), std::move(edges)), {});
}

void accumulate(LveResult& into, const CollapsedGraph& c) {
  const auto table = weight_table(c.graph, WeightMethod::brute);
  Rational norm = 0;
  for (const SpanningTree& t : enumerate_spanning_trees(c.graph)) {
    const ConstructiveWeight& w = table.at(tree_key(t));
    norm += w.value;
    const Rational contribution = w.value * c.amplitude;
    into.by_tree_shape[tree_shape_key(c.graph, t)][c.order] += contribution;
    into.by_pair[canonical_key(c.graph, t)][c.order] += contribution;
    into.totals[c.order] += contribution;
  }
  if (norm != 1) throw std::logic_error("lve_repack: weights do not sum to 1");
}

}  // namespace

LveResult lve_repack(unsigned max_order, unsigned cap, int threads) {
  if (max_order > cap)
    throw CapExceeded("lve_repack: order " + std::to_string(max_order) + " exceeds cap " +
                      std::to_string(cap));
  LveResult result;
  result.oracle = logz_oracle(max_order);
  for (unsigned n = 1; n <= max_order; ++n) {
    const std::vector<VacuumGraph> graphs = generate_vacuum_graphs(n, cap);
    std::vector<LveResult> partial(graphs.size());
    parallel_for_index(graphs.size(), threads, [&](std::size_t i) {
      if (!graphs[i].graph.is_connected()) return;  // only connected survive in log Z
      Rational extension_sum = 0;
      for (const ExtendedGraph& e : extensions(graphs[i])) {
        extension_sum += e.amplitude;
        accumulate(partial[i], collapse(e));
      }
      if (extension_sum != graphs[i].amplitude())
        throw std::logic_error("lve_repack: extension amplitudes do not sum to the base");
    });
    // Merge in matching order; rational sums make this order-independent
    // anyway, but the loop is kept deterministic.
    for (const LveResult& p : partial) {
      for (const auto& [key, series] : p.by_tree_shape)
        for (const auto& [ord, coeff] : series) result.by_tree_shape[key][ord] += coeff;
      for (const auto& [key, series] : p.by_pair)
        for (const auto& [ord, coeff] : series) result.by_pair[key][ord] += coeff;
      for (const auto& [ord, coeff] : p.totals) result.totals[ord] += coeff;
    }
  }
  return result;
}

Rational series_eval(const AmplitudeSeries& s, const Rational& lambda) {
  Rational value = 0;
  for (const auto& [order, coeff] : s) {
    Rational power = 1;
    for (unsigned i = 0; i < order; ++i) power *= lambda;
    value += coeff * power;
  }
  return value;
}

}  // namespace resumkit::phi4
