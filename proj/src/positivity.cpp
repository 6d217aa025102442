#include "resumkit/positivity.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace resumkit {

namespace {

void validate_weights(const Multigraph& g, const SpanningTree& t, const WeakeningVector& w) {
  if (!is_spanning_tree(g, t))
    throw std::invalid_argument("weakening: not a spanning tree of the graph");
  for (const std::string& label : t)
    if (!w.count(label))
      throw std::invalid_argument("weakening: missing w for tree edge " + label);
  for (const auto& [label, value] : w) {
    if (std::find(t.begin(), t.end(), label) == t.end())
      throw std::invalid_argument("weakening: w given for non-tree edge " + label);
    if (value < 0 || value > 1)
      throw std::invalid_argument("weakening: w[" + label + "] outside [0,1]");
  }
}

}  // namespace

WeakeningMatrix build_weakening_matrix(const Multigraph& g, const SpanningTree& t,
                                       const WeakeningVector& w) {
  validate_weights(g, t, w);
  const std::size_t V = g.vertex_count();
  WeakeningMatrix m;
  m.vertices = g.vertices();
  m.entries.assign(V, std::vector<Rational>(V, Rational(1)));
  for (std::size_t i = 0; i < V; ++i) {
    for (std::size_t j = i + 1; j < V; ++j) {
      Rational low = 1;
      for (const std::string& label : tree_path(g, t, m.vertices[i], m.vertices[j]))
        low = std::min(low, w.at(label));
      m.entries[i][j] = low;
      m.entries[j][i] = low;
    }
  }
  return m;
}

PsdReport check_psd(const std::vector<std::vector<double>>& m, double tol) {
  const std::size_t n = m.size();
  Eigen::MatrixXd a(n, n);
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("check_psd: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) throw std::invalid_argument("check_psd: matrix is not symmetric");
      a(Eigen::Index(i), Eigen::Index(j)) = m[i][j];
      norm = std::max(norm, std::abs(m[i][j]));
    }
  }
  if (n == 0) return {true, 0.0};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const double min_ev = solver.eigenvalues().minCoeff();
  return {min_ev >= -tol * std::max(1.0, norm), min_ev};
}

PsdReport check_psd(const WeakeningMatrix& m, double tol) {
  std::vector<std::vector<double>> d(m.size(), std::vector<double>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) d[i][j] = to_double(m.entries[i][j]);
  return check_psd(d, tol);
}

BlockPartition block_decomposition(const Multigraph& g, const SpanningTree& t,
                                   const WeakeningVector& w) {
  validate_weights(g, t, w);
  const std::size_t V = g.vertex_count();

  BlockPartition bp;
  bp.sigma_order = t;
  std::sort(bp.sigma_order.begin(), bp.sigma_order.end(),
            [&](const std::string& a, const std::string& b) {
              if (w.at(a) != w.at(b)) return w.at(a) > w.at(b);
              return a < b;
            });

  // Component labels after inserting the first k-1 edges, k = 1..V.
  std::vector<std::size_t> comp(V);
  std::iota(comp.begin(), comp.end(), std::size_t{0});
  auto snapshot = [&]() {
    std::map<std::size_t, std::vector<std::string>> blocks;
    for (std::size_t i = 0; i < V; ++i) blocks[comp[i]].push_back(g.vertices()[i]);
    std::vector<std::vector<std::string>> out;
    for (auto& [root, members] : blocks) {
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  Rational prev = 1;
  for (std::size_t k = 0; k < V; ++k) {
    bp.partitions.push_back(snapshot());
    const Rational cur = k < V - 1 ? w.at(bp.sigma_order[k]) : Rational(0);
    bp.coefficients.push_back(prev - cur);
    prev = cur;
    if (k < V - 1) {
      const Edge& e = g.edge(bp.sigma_order[k]);
      const std::size_t from = comp[g.vertex_index(e.end_a)];
      const std::size_t to = comp[g.vertex_index(e.end_b)];
      for (std::size_t i = 0; i < V; ++i)
        if (comp[i] == from) comp[i] = to;
    }
  }
  return bp;
}

WeakeningMatrix reconstruct_from_blocks(const BlockPartition& bp,
                                        const std::vector<std::string>& vertices) {
  const std::size_t V = vertices.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < V; ++i) index[vertices[i]] = i;

  WeakeningMatrix m;
  m.vertices = vertices;
  m.entries.assign(V, std::vector<Rational>(V, Rational(0)));
  for (std::size_t k = 0; k < bp.partitions.size(); ++k) {
    for (const std::vector<std::string>& block : bp.partitions[k]) {
      for (const std::string& a : block) {
        for (const std::string& b : block)
          m.entries[index.at(a)][index.at(b)] += bp.coefficients[k];
      }
    }
  }
  return m;
}

}  // namespace resumkit
