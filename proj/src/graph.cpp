#include "resumkit/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace resumkit {

namespace {

// Union-find over vertex indices.
struct DisjointSet {
  std::vector<std::size_t> parent;
  explicit DisjointSet(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns false if already joined.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Multigraph::Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], i).second)
      throw std::invalid_argument("duplicate vertex label: " + vertices_[i]);
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (!edge_index_.emplace(e.label, i).second)
      throw std::invalid_argument("duplicate edge label: " + e.label);
    if (!vertex_index_.count(e.end_a))
      throw std::invalid_argument("edge " + e.label + " references unknown vertex: " + e.end_a);
    if (!vertex_index_.count(e.end_b))
      throw std::invalid_argument("edge " + e.label + " references unknown vertex: " + e.end_b);
  }
}

bool Multigraph::has_vertex(const std::string& label) const { return vertex_index_.count(label) > 0; }

bool Multigraph::has_edge(const std::string& label) const { return edge_index_.count(label) > 0; }

std::size_t Multigraph::vertex_index(const std::string& label) const {
  const auto it = vertex_index_.find(label);
  if (it == vertex_index_.end()) throw std::invalid_argument("unknown vertex label: " + label);
  return it->second;
}

std::size_t Multigraph::edge_index(const std::string& label) const {
  const auto it = edge_index_.find(label);
  if (it == edge_index_.end()) throw std::invalid_argument("unknown edge label: " + label);
  return it->second;
}

const Edge& Multigraph::edge(const std::string& label) const { return edges_[edge_index(label)]; }

bool Multigraph::is_connected() const {
  if (vertices_.empty()) throw std::invalid_argument("is_connected: empty vertex set");
  DisjointSet ds(vertices_.size());
  std::size_t components = vertices_.size();
  for (const Edge& e : edges_) {
    if (e.is_self_loop()) continue;
    if (ds.unite(vertex_index(e.end_a), vertex_index(e.end_b))) --components;
  }
  return components == 1;
}

Multigraph Multigraph::contract_edge(const std::string& label) const {
  const Edge& e = edge(label);
  if (e.is_self_loop()) throw std::invalid_argument("cannot contract self-loop: " + label);
  const std::string& keep = std::min(e.end_a, e.end_b);
  const std::string& drop = std::max(e.end_a, e.end_b);

  std::vector<std::string> new_vertices;
  new_vertices.reserve(vertices_.size() - 1);
  for (const std::string& v : vertices_)
    if (v != drop) new_vertices.push_back(v);

  std::vector<Edge> new_edges;
  new_edges.reserve(edges_.size() - 1);
  for (const Edge& other : edges_) {
    if (other.label == label) continue;
    Edge copy = other;
    if (copy.end_a == drop) copy.end_a = keep;
    if (copy.end_b == drop) copy.end_b = keep;
    new_edges.push_back(std::move(copy));
  }
  return Multigraph(std::move(new_vertices), std::move(new_edges));
}

Multigraph Multigraph::delete_edge(const std::string& label) const {
  const std::size_t idx = edge_index(label);
  std::vector<Edge> new_edges;
  new_edges.reserve(edges_.size() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (i != idx) new_edges.push_back(edges_[i]);
  return Multigraph(vertices_, std::move(new_edges));
}

SpanningTree normalized_tree(std::vector<std::string> edge_labels) {
  std::sort(edge_labels.begin(), edge_labels.end());
  return edge_labels;
}

bool is_spanning_tree(const Multigraph& g, const SpanningTree& t) {
  if (g.vertex_count() == 0) return false;
  if (t.size() != g.vertex_count() - 1) return false;
  std::set<std::string> seen;
  DisjointSet ds(g.vertex_count());
  for (const std::string& label : t) {
    if (!g.has_edge(label)) return false;
    if (!seen.insert(label).second) return false;
    const Edge& e = g.edge(label);
    if (e.is_self_loop()) return false;
    if (!ds.unite(g.vertex_index(e.end_a), g.vertex_index(e.end_b))) return false;  // cycle
  }
  return true;
}

TreePath tree_path(const Multigraph& g, const SpanningTree& t, const std::string& i,
                   const std::string& j) {
  if (!is_spanning_tree(g, t))
    throw std::invalid_argument("tree_path: not a spanning tree of the graph");
  const std::size_t src = g.vertex_index(i);
  const std::size_t dst = g.vertex_index(j);
  if (src == dst) return {};

  // Adjacency over tree edges only.
  std::vector<std::vector<std::pair<std::size_t, std::string>>> adj(g.vertex_count());
  for (const std::string& label : t) {
    const Edge& e = g.edge(label);
    const std::size_t a = g.vertex_index(e.end_a);
    const std::size_t b = g.vertex_index(e.end_b);
    adj[a].emplace_back(b, label);
    adj[b].emplace_back(a, label);
  }

  std::vector<std::size_t> prev_vertex(g.vertex_count(), SIZE_MAX);
  std::vector<std::string> prev_edge(g.vertex_count());
  std::queue<std::size_t> queue;
  queue.push(src);
  prev_vertex[src] = src;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    if (v == dst) break;
    for (const auto& [u, label] : adj[v]) {
      if (prev_vertex[u] != SIZE_MAX) continue;
      prev_vertex[u] = v;
      prev_edge[u] = label;
      queue.push(u);
    }
  }

  TreePath path;
  for (std::size_t v = dst; v != src; v = prev_vertex[v]) path.push_back(prev_edge[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

struct CanonEdge {
  std::size_t a, b;
  bool marked;
};

// Iterated refinement of vertex signatures. Ranks depend only on the
// isomorphism class, never on input labels or ordering.
std::vector<int> refine_ranks(std::size_t n, const std::vector<CanonEdge>& edges) {
  std::vector<int> rank(n, 0);
  int distinct = 1;
  for (std::size_t round = 0; round < n + 1; ++round) {
    std::vector<std::vector<long long>> sig(n);
    for (std::size_t v = 0; v < n; ++v) sig[v] = {rank[v], 0, 0};
    std::vector<std::vector<std::pair<long long, long long>>> neigh(n);
    for (const CanonEdge& e : edges) {
      if (e.a == e.b) {
        ++sig[e.a][e.marked ? 2 : 1];
      } else {
        neigh[e.a].emplace_back(e.marked ? 1 : 0, rank[e.b]);
        neigh[e.b].emplace_back(e.marked ? 1 : 0, rank[e.a]);
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(neigh[v].begin(), neigh[v].end());
      for (const auto& [c, r] : neigh[v]) {
        sig[v].push_back(c);
        sig[v].push_back(r);
      }
    }
    std::vector<std::vector<long long>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> new_rank(n);
    for (std::size_t v = 0; v < n; ++v)
      new_rank[v] =
          int(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    const int new_distinct = int(sorted.size());
    const bool stable = new_distinct == distinct && new_rank == rank;
    rank = std::move(new_rank);
    distinct = new_distinct;
    if (stable) break;
  }
  return rank;
}

using EdgeTuple = std::tuple<std::size_t, std::size_t, bool>;

void enumerate_assignments(const std::vector<std::vector<std::size_t>>& classes,
                           std::size_t class_idx, std::vector<std::size_t>& next_position,
                           std::vector<std::size_t>& pos, const std::vector<CanonEdge>& edges,
                           std::vector<EdgeTuple>& best, bool& has_best) {
  if (class_idx == classes.size()) {
    std::vector<EdgeTuple> relabeled;
    relabeled.reserve(edges.size());
    for (const CanonEdge& e : edges) {
      const std::size_t a = pos[e.a];
      const std::size_t b = pos[e.b];
      relabeled.emplace_back(std::min(a, b), std::max(a, b), e.marked);
    }
    std::sort(relabeled.begin(), relabeled.end());
    if (!has_best || relabeled < best) {
      best = std::move(relabeled);
      has_best = true;
    }
    return;
  }
  std::vector<std::size_t> members = classes[class_idx];
  const std::size_t base = next_position[class_idx];
  std::sort(members.begin(), members.end());
  do {
    for (std::size_t k = 0; k < members.size(); ++k) pos[members[k]] = base + k;
    enumerate_assignments(classes, class_idx + 1, next_position, pos, edges, best, has_best);
  } while (std::next_permutation(members.begin(), members.end()));
}

}  // namespace

CanonicalForm canonical_form(const Multigraph& g, const std::vector<std::string>& marked) {
  const std::size_t n = g.vertex_count();
  std::set<std::size_t> marked_idx;
  for (const std::string& label : marked) marked_idx.insert(g.edge_index(label));

  std::vector<CanonEdge> edges;
  edges.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    const std::size_t a = g.vertex_index(e.end_a);
    const std::size_t b = g.vertex_index(e.end_b);
    edges.push_back({std::min(a, b), std::max(a, b), marked_idx.count(i) > 0});
  }

  const std::vector<int> rank = refine_ranks(n, edges);

  // Vertex classes in rank order; positions are assigned class by class.
  const int num_classes = n == 0 ? 0 : *std::max_element(rank.begin(), rank.end()) + 1;
  std::vector<std::vector<std::size_t>> classes(num_classes);
  for (std::size_t v = 0; v < n; ++v) classes[rank[v]].push_back(v);
  std::vector<std::size_t> next_position(num_classes, 0);
  std::size_t offset = 0;
  for (int c = 0; c < num_classes; ++c) {
    next_position[c] = offset;
    offset += classes[c].size();
  }

  std::vector<std::size_t> pos(n, 0);
  std::vector<EdgeTuple> best;
  bool has_best = false;
  enumerate_assignments(classes, 0, next_position, pos, edges, best, has_best);
  if (!has_best) best = {};

  CanonicalForm form;
  form.vertex_count = n;
  form.edges = std::move(best);
  return form;
}

std::string CanonicalForm::key() const {
  std::string out = "V" + std::to_string(vertex_count) + "|";
  for (const auto& [a, b, m] : edges) {
    out += std::to_string(a);
    out += '-';
    out += std::to_string(b);
    if (m) out += '*';
    out += ';';
  }
  return out;
}

std::string canonical_key(const Multigraph& g, const std::vector<std::string>& marked) {
  return canonical_form(g, marked).key();
}

}  // namespace resumkit
