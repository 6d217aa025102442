#pragma once

#include <map>
#include <string>
#include <vector>

#include "resumkit/graph.hpp"
#include "resumkit/rational.hpp"

namespace resumkit {

/// One weakening parameter in [0,1] per tree edge. Rational throughout so the
/// block reconstruction can be verified with zero residual; doubles convert
/// exactly.
using WeakeningVector = std::map<std::string, Rational>;

/// Symmetric, unit diagonal, entries in [0,1]; indexed like `vertices`.
struct WeakeningMatrix {
  std::vector<std::string> vertices;
  std::vector<std::vector<Rational>> entries;

  const Rational& at(std::size_t i, std::size_t j) const { return entries[i][j]; }
  std::size_t size() const { return vertices.size(); }
};

struct PsdReport {
  bool psd = false;
  double min_eigenvalue = 0.0;
};

/// The nested partitions B_1 (singletons) ... B_V (one block) obtained by
/// inserting tree edges in decreasing-w order, with the barycentric
/// coefficients w_{sigma(k-1)} - w_{sigma(k)} (w_{sigma(0)} = 1, w_{sigma(V)} = 0).
struct BlockPartition {
  std::vector<std::string> sigma_order;  // tree edges, decreasing w, label tiebreak
  std::vector<Rational> coefficients;    // size V, nonnegative, sums to 1
  std::vector<std::vector<std::vector<std::string>>> partitions;  // size V
};

/// x_ii = 1; x_ij = min of w over the tree path between vertices i and j.
WeakeningMatrix build_weakening_matrix(const Multigraph& g, const SpanningTree& t,
                                       const WeakeningVector& w);

/// psd iff the smallest eigenvalue is >= -tol * max(1, max-abs entry).
PsdReport check_psd(const std::vector<std::vector<double>>& m, double tol = 1e-10);
PsdReport check_psd(const WeakeningMatrix& m, double tol = 1e-10);

BlockPartition block_decomposition(const Multigraph& g, const SpanningTree& t,
                                   const WeakeningVector& w);

/// Sum of coefficient * block matrix; equals build_weakening_matrix exactly.
WeakeningMatrix reconstruct_from_blocks(const BlockPartition& bp,
                                        const std::vector<std::string>& vertices);

}  // namespace resumkit
