#include "resumkit/symanzik.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace resumkit {

namespace {

void require_alpha_per_edge(const Multigraph& g, const std::map<std::string, Rational>& alpha) {
  for (const Edge& e : g.edges())
    if (!alpha.count(e.label))
      throw std::invalid_argument("alpha missing edge " + e.label);
}

Rational rational_determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      result = -result;
    }
    result *= a[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[row][c] -= factor * a[col][c];
    }
  }
  return result;
}

}  // namespace

Rational SymanzikPolynomial::evaluate(const std::map<std::string, Rational>& alpha) const {
  Rational sum = 0;
  for (const std::vector<std::string>& monomial : monomials) {
    Rational term = 1;
    for (const std::string& label : monomial) {
      const auto it = alpha.find(label);
      if (it == alpha.end())
        throw std::invalid_argument("alpha missing edge " + label);
      term *= it->second;
    }
    sum += term;
  }
  return sum;
}

SymanzikPolynomial symanzik_polynomial(const Multigraph& g) {
  if (!g.is_connected())
    throw std::invalid_argument("symanzik_polynomial: graph is disconnected");
  SymanzikPolynomial u;
  u.degree = g.edge_count() - (g.vertex_count() - 1);
  for (const SpanningTree& t : enumerate_spanning_trees(g)) {
    const std::set<std::string> tree_set(t.begin(), t.end());
    std::vector<std::string> monomial;
    monomial.reserve(u.degree);
    for (const Edge& e : g.edges())
      if (!tree_set.count(e.label)) monomial.push_back(e.label);
    std::sort(monomial.begin(), monomial.end());
    u.monomials.push_back(std::move(monomial));
  }
  std::sort(u.monomials.begin(), u.monomials.end());
  return u;
}

Rational spanning_tree_count_matrix_tree(const Multigraph& g,
                                         const std::map<std::string, Rational>& alpha) {
  require_alpha_per_edge(g, alpha);
  const std::size_t V = g.vertex_count();
  if (V == 0) throw std::invalid_argument("matrix-tree: empty vertex set");
  if (V == 1) return 1;

  std::vector<std::vector<Rational>> lap(V - 1, std::vector<Rational>(V - 1, Rational(0)));
  for (const Edge& e : g.edges()) {
    if (e.is_self_loop()) continue;
    const std::size_t a = g.vertex_index(e.end_a);
    const std::size_t b = g.vertex_index(e.end_b);
    const Rational& weight = alpha.at(e.label);
    if (a < V - 1) lap[a][a] += weight;
    if (b < V - 1) lap[b][b] += weight;
    if (a < V - 1 && b < V - 1) {
      lap[a][b] -= weight;
      lap[b][a] -= weight;
    }
  }
  return rational_determinant(std::move(lap));
}

Rational symanzik_eval_matrix_tree(const Multigraph& g,
                                   const std::map<std::string, Rational>& alpha) {
  require_alpha_per_edge(g, alpha);
  if (!g.is_connected()) return 0;
  std::map<std::string, Rational> inverted;
  Rational product = 1;
  for (const Edge& e : g.edges()) {
    const Rational& value = alpha.at(e.label);
    if (value == 0)
      throw std::invalid_argument("complement transform needs nonzero alpha: " + e.label);
    product *= value;
    inverted.emplace(e.label, 1 / value);
  }
  return product * spanning_tree_count_matrix_tree(g, inverted);
}

namespace {

// Index-based evaluator: U(alpha) = prod(self-loop alphas) * sum of monomial
// products over the loop-free graph's spanning-tree complements.
struct UEvaluator {
  std::vector<int> loop_indices;
  std::vector<std::vector<int>> monomial_indices;

  explicit UEvaluator(const Multigraph& g) {
    std::vector<std::string> keep_vertices = g.vertices();
    std::vector<Edge> keep_edges;
    std::map<std::string, int> full_index;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edges()[i];
      full_index[e.label] = int(i);
      if (e.is_self_loop())
        loop_indices.push_back(int(i));
      else
        keep_edges.push_back(e);
    }
    const Multigraph reduced(std::move(keep_vertices), std::move(keep_edges));
    const SymanzikPolynomial u = symanzik_polynomial(reduced);
    for (const std::vector<std::string>& monomial : u.monomials) {
      std::vector<int> idx;
      idx.reserve(monomial.size());
      for (const std::string& label : monomial) idx.push_back(full_index.at(label));
      monomial_indices.push_back(std::move(idx));
    }
  }

  double operator()(const std::vector<double>& alpha) const {
    double sum = 0.0;
    for (const std::vector<int>& monomial : monomial_indices) {
      double term = 1.0;
      for (const int i : monomial) term *= alpha[i];
      sum += term;
    }
    for (const int i : loop_indices) sum *= alpha[i];
    return sum;
  }
};

void validate_params(const Multigraph& g, const ModelParams& params, const char* op) {
  if (!g.is_connected()) throw std::invalid_argument(std::string(op) + ": graph is disconnected");
  if (!(params.dimension >= 0.0 && params.dimension < 2.0))
    throw std::invalid_argument(std::string(op) + ": dimension must be in [0, 2)");
  if (!(params.mass > 0.0))
    throw std::invalid_argument(std::string(op) + ": mass must be positive");
}

double draw_exponential(std::mt19937_64& rng) {
  const double u = u64_to_unit(rng());
  return std::max(-std::log1p(-u), 1e-300);
}

}  // namespace

McEstimate amplitude_parametric(const Multigraph& g, const ModelParams& params,
                                std::uint64_t samples, std::uint64_t seed, int threads) {
  validate_params(g, params, "amplitude_parametric");
  const UEvaluator u_of(g);
  const std::size_t E = g.edge_count();
  const double m2 = params.mass * params.mass;
  const double weight = std::pow(params.mass, -2.0 * double(E));
  const double exponent = -params.dimension / 2.0;

  return run_chunked_mc(samples, seed, threads, [&, E](std::mt19937_64& rng) {
    std::vector<double> alpha(E);
    for (std::size_t i = 0; i < E; ++i) alpha[i] = draw_exponential(rng) / m2;
    return weight * std::pow(u_of(alpha), exponent);
  });
}

McEstimate amplitude_sector_decomposed(const Multigraph& g, const ModelParams& params,
                                       std::uint64_t samples, std::uint64_t seed, int threads,
                                       const WeightCaps& caps) {
  validate_params(g, params, "amplitude_sector_decomposed");
  const std::size_t E = g.edge_count();
  if (int(E) > caps.brute_force_max_edges)
    throw CapExceeded("amplitude_sector_decomposed: edge count exceeds sector cap");
  const UEvaluator u_of(g);
  const double m2 = params.mass * params.mass;
  const double weight = std::pow(params.mass, -2.0 * double(E));
  const double exponent = -params.dimension / 2.0;
  const double sectors = to_double(Rational(factorial(unsigned(E))));

  return run_chunked_mc(samples, seed, threads, [&, E](std::mt19937_64& rng) {
    std::vector<double> draws(E);
    for (std::size_t i = 0; i < E; ++i) draws[i] = draw_exponential(rng) / m2;
    std::sort(draws.begin(), draws.end());
    // One ordered assignment per Hepp sector, all sharing this sample's
    // order statistics.
    std::vector<std::size_t> perm(E);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<double> alpha(E);
    double acc = 0.0;
    do {
      for (std::size_t i = 0; i < E; ++i) alpha[perm[i]] = draws[i];
      acc += std::pow(u_of(alpha), exponent);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return weight * acc / sectors;
  });
}

}  // namespace resumkit
