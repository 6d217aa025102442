#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace resumkit {

struct Edge {
  std::string label;
  std::string end_a;
  std::string end_b;

  bool is_self_loop() const { return end_a == end_b; }
};

/// Undirected multigraph with labeled vertices and labeled edges.
/// Multi-edges and self-loops are allowed; insertion order is preserved.
/// Immutable after construction: contraction and deletion return new graphs.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(const std::string& label) const;
  bool has_edge(const std::string& label) const;
  std::size_t vertex_index(const std::string& label) const;
  std::size_t edge_index(const std::string& label) const;
  const Edge& edge(const std::string& label) const;

  bool is_connected() const;

  /// Merges the endpoints of a non-self-loop edge; the merged vertex keeps the
  /// lexicographically smaller label. Parallel edges become self-loops.
  Multigraph contract_edge(const std::string& label) const;

  Multigraph delete_edge(const std::string& label) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t> vertex_index_;
  std::map<std::string, std::size_t> edge_index_;
};

/// Edge labels of the unique tree path between two vertices; empty when i = j.
using TreePath = std::vector<std::string>;

/// Edge-label subset of a host graph forming a spanning tree (kept sorted).
using SpanningTree = std::vector<std::string>;

SpanningTree normalized_tree(std::vector<std::string> edge_labels);

bool is_spanning_tree(const Multigraph& g, const SpanningTree& t);

/// Throws unless t spans g.
TreePath tree_path(const Multigraph& g, const SpanningTree& t, const std::string& i,
                   const std::string& j);

/// Canonical form of (graph, marked edge subset) up to relabeling of vertices
/// and edges: the vertex-count plus the lexicographically smallest relabeled
/// edge list over all admissible vertex orderings.
struct CanonicalForm {
  std::size_t vertex_count = 0;
  // (a, b, marked) with a <= b, sorted.
  std::vector<std::tuple<std::size_t, std::size_t, bool>> edges;

  std::string key() const;
};

CanonicalForm canonical_form(const Multigraph& g, const std::vector<std::string>& marked);

/// Two (graph, marked) pairs get equal keys exactly when they are isomorphic.
std::string canonical_key(const Multigraph& g, const std::vector<std::string>& marked);

}  // namespace resumkit
