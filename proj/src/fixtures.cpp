#include "resumkit/fixtures.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace resumkit::fixtures {

Multigraph g_eye() {
  return Multigraph({"A", "B", "C", "D"}, {{"l1", "A", "B"},
                                           {"l2", "C", "D"},
                                           {"l3", "A", "C"},
                                           {"l4", "B", "D"},
                                           {"l5", "B", "C"},
                                           {"l6", "B", "C"}});
}

Multigraph bubble() {
  return Multigraph({"v1", "v2"}, {{"l1", "v1", "v2"}, {"l2", "v1", "v2"}});
}

Multigraph triangle() {
  return Multigraph({"A", "B", "C"}, {{"l1", "A", "B"}, {"l2", "B", "C"}, {"l3", "C", "A"}});
}

Multigraph cycle(unsigned n) {
  if (n < 1) throw std::invalid_argument("cycle: need at least one vertex");
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  for (unsigned i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));
  for (unsigned i = 1; i <= n; ++i) {
    edges.push_back({"e" + std::to_string(i), "v" + std::to_string(i),
                     "v" + std::to_string(i % n + 1)});
  }
  return Multigraph(std::move(vertices), std::move(edges));
}

Multigraph tadpole() {
  return Multigraph({"A", "B"}, {{"l1", "A", "A"}, {"l2", "A", "B"}});
}

namespace {

Multigraph with_extra_edge(const Multigraph& g, std::size_t i, std::size_t j, bool new_vertex) {
  std::vector<std::string> vertices = g.vertices();
  std::vector<Edge> edges = g.edges();
  const std::string edge_label = "e" + std::to_string(edges.size() + 1);
  if (new_vertex) {
    const std::string fresh = "v" + std::to_string(vertices.size() + 1);
    vertices.push_back(fresh);
    edges.push_back({edge_label, g.vertices()[i], fresh});
  } else {
    edges.push_back({edge_label, g.vertices()[i], g.vertices()[j]});
  }
  return Multigraph(std::move(vertices), std::move(edges));
}

}  // namespace

std::vector<Multigraph> connected_multigraphs_up_to_iso(unsigned max_edges) {
  // Every connected multigraph arises from a connected one with one edge
  // fewer: drop a non-tree edge, or a leaf edge together with its leaf.
  std::vector<Multigraph> out;
  std::map<std::string, Multigraph> level;
  const Multigraph single({"v1"}, {});
  level.emplace(canonical_key(single, {}), single);
  out.push_back(single);

  for (unsigned e = 1; e <= max_edges; ++e) {
    std::map<std::string, Multigraph> next;
    for (const auto& [key, g] : level) {
      const std::size_t V = g.vertex_count();
      for (std::size_t i = 0; i < V; ++i) {
        for (std::size_t j = i; j < V; ++j) {
          Multigraph h = with_extra_edge(g, i, j, false);
          next.emplace(canonical_key(h, {}), std::move(h));
        }
        Multigraph h = with_extra_edge(g, i, i, true);
        next.emplace(canonical_key(h, {}), std::move(h));
      }
    }
    for (const auto& [key, g] : next) out.push_back(g);
    level = std::move(next);
  }
  return out;
}

Multigraph random_tree_graph(unsigned vertices, std::mt19937_64& rng) {
  if (vertices < 1) throw std::invalid_argument("random_tree_graph: need at least one vertex");
  std::vector<std::string> labels;
  for (unsigned i = 1; i <= vertices; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  for (unsigned i = 2; i <= vertices; ++i) {
    std::uniform_int_distribution<unsigned> parent(1, i - 1);
    edges.push_back({"e" + std::to_string(i - 1), "v" + std::to_string(parent(rng)),
                     "v" + std::to_string(i)});
  }
  return Multigraph(std::move(labels), std::move(edges));
}

Multigraph random_connected_multigraph(unsigned vertices, unsigned edges, std::mt19937_64& rng) {
  if (vertices < 1) throw std::invalid_argument("random_connected_multigraph: empty vertex set");
  if (edges + 1 < vertices)
    throw std::invalid_argument("random_connected_multigraph: too few edges to connect");
  std::vector<std::string> labels;
  for (unsigned i = 1; i <= vertices; ++i) labels.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<unsigned> pick(1, vertices);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Edge> chosen;
    for (unsigned k = 1; k <= edges; ++k) {
      chosen.push_back({"e" + std::to_string(k), "v" + std::to_string(pick(rng)),
                        "v" + std::to_string(pick(rng))});
    }
    Multigraph g(labels, std::move(chosen));
    if (g.is_connected()) return g;
  }
  throw std::runtime_error("random_connected_multigraph: rejection sampling stalled");
}

}  // namespace resumkit::fixtures
