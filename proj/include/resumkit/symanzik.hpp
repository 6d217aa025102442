#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "resumkit/graph.hpp"
#include "resumkit/rational.hpp"
#include "resumkit/sampling.hpp"
#include "resumkit/tree_weights.hpp"

namespace resumkit {

/// U_G = sum over spanning trees of prod_{edge not in tree} alpha_edge.
/// Multilinear, homogeneous of degree E - V + 1; all coefficients are 1.
struct SymanzikPolynomial {
  std::vector<std::vector<std::string>> monomials;  // sorted label sets, sorted
  std::size_t degree = 0;                           // loop number E - V + 1

  Rational evaluate(const std::map<std::string, Rational>& alpha) const;
};

SymanzikPolynomial symanzik_polynomial(const Multigraph& g);

/// Weighted matrix-tree theorem: cofactor of the alpha-weighted Laplacian,
/// i.e. sum over spanning trees of prod_{edge in tree} alpha_edge.
/// Self-loops are ignored; disconnected input gives 0.
Rational spanning_tree_count_matrix_tree(const Multigraph& g,
                                         const std::map<std::string, Rational>& alpha);

/// U_G evaluated through the matrix-tree cofactor and the complement
/// transform (prod of all alpha) * kappa(1/alpha). Requires nonzero alpha.
Rational symanzik_eval_matrix_tree(const Multigraph& g,
                                   const std::map<std::string, Rational>& alpha);

struct ModelParams {
  double dimension = 1.0;  // 0 <= D < 2
  double mass = 1.0;       // m > 0
  double coupling = 0.0;   // lambda, used by the phi4 pipeline
};

/// A = int dalpha exp(-m^2 sum alpha) / U^{D/2}, estimated by importance
/// sampling with alpha ~ Exp(m^2) per edge: m^{-2E} * E[U^{-D/2}].
McEstimate amplitude_parametric(const Multigraph& g, const ModelParams& params,
                                std::uint64_t samples, std::uint64_t seed, int threads = 1);

/// Same integral summed over Hepp sectors: each sample draws E exponentials
/// and averages U^{-D/2} over all E! ordered assignments, one per sector.
McEstimate amplitude_sector_decomposed(const Multigraph& g, const ModelParams& params,
                                       std::uint64_t samples, std::uint64_t seed, int threads = 1,
                                       const WeightCaps& caps = {});

}  // namespace resumkit
