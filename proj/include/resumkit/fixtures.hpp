#pragma once

#include <random>
#include <vector>

#include "resumkit/graph.hpp"

namespace resumkit::fixtures {

/// Four vertices A..D; l1=AB, l2=CD, l3=AC, l4=BD, and the double edge
/// l5, l6 = BC. Twelve spanning trees.
Multigraph g_eye();

/// Two vertices joined by the double edge l1, l2.
Multigraph bubble();

/// Vertices A, B, C; edges l1=AB, l2=BC, l3=CA.
Multigraph triangle();

/// Vertices v1..vn; edge ei joins vi to v(i+1), en closes the cycle.
/// n = 1 is a single self-loop, n = 2 the double edge.
Multigraph cycle(unsigned n);

/// Self-loop l1 on A plus the pendant edge l2 = AB.
Multigraph tadpole();

/// All connected multigraphs with at most max_edges edges, one per
/// isomorphism class, sorted by (edge count, canonical key). Vertices are
/// v1..vk and edges e1..eE. Grown edge-by-edge with canonical-key dedup.
std::vector<Multigraph> connected_multigraphs_up_to_iso(unsigned max_edges);

/// Uniform random recursive tree on labeled vertices v1..vV.
Multigraph random_tree_graph(unsigned vertices, std::mt19937_64& rng);

/// Random connected multigraph with the exact edge and vertex counts
/// (self-loops and multi-edges allowed); rejection-sampled.
Multigraph random_connected_multigraph(unsigned vertices, unsigned edges, std::mt19937_64& rng);

}  // namespace resumkit::fixtures
