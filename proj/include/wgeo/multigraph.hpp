#pragma once

// Finite undirected multigraphs: parallel edges allowed, loops rejected.
// Vertices and edges are dense integer ids; iteration in id order makes every
// derived artifact (DOT, witnesses, random simulations) deterministic.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wgeo/word.hpp"

namespace wgeo {

// Graph vertices carry (generator, sign, copy) labels so Whitehead graphs,
// covers and splices can track where a vertex came from.  copy 0 is the base;
// names render as "a", "A", and "a_2" for copy 2.
struct VertexLabel {
  int generator = 0;
  int sign = 1;
  int copy = 0;

  Letter letter() const { return Letter(generator, sign); }

  std::string name() const {
    std::string s = Letter(generator, sign).name();
    if (copy != 0) s += "_" + std::to_string(copy);
    return s;
  }

  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

class MultiGraph {
 public:
  MultiGraph() = default;

  MultiGraph(std::vector<VertexLabel> labels, std::vector<std::pair<int, int>> edges)
      : labels_(std::move(labels)), edges_(std::move(edges)) {
    int n = static_cast<int>(labels_.size());
    incidence_.resize(labels_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      auto [u, v] = edges_[e];
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw domain_error("edge endpoint out of range");
      if (u == v) throw domain_error("loops are not allowed");
      incidence_[static_cast<std::size_t>(u)].push_back(static_cast<int>(e));
      incidence_[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
    }
  }

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const VertexLabel& label(int v) const {
    check_vertex(v);
    return labels_[static_cast<std::size_t>(v)];
  }
  const std::vector<VertexLabel>& labels() const { return labels_; }

  std::pair<int, int> endpoints(int e) const {
    check_edge(e);
    return edges_[static_cast<std::size_t>(e)];
  }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Edge ids at v, ascending; a parallel class contributes one entry per edge.
  const std::vector<int>& incident_edges(int v) const {
    check_vertex(v);
    return incidence_[static_cast<std::size_t>(v)];
  }

  int other_endpoint(int e, int v) const {
    auto [a, b] = endpoints(e);
    if (a == v) return b;
    if (b == v) return a;
    throw domain_error("vertex is not an endpoint of the edge");
  }

  int valence(int v) const { return static_cast<int>(incident_edges(v).size()); }

  // First vertex carrying the label, or -1.
  int find_vertex(const VertexLabel& l) const {
    for (std::size_t v = 0; v < labels_.size(); ++v)
      if (labels_[v] == l) return static_cast<int>(v);
    return -1;
  }

  int multiplicity(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    int count = 0;
    for (int e : incident_edges(u))
      if (other_endpoint(e, u) == v) ++count;
    return count;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) throw domain_error("unknown vertex id");
  }
  void check_edge(int e) const {
    if (e < 0 || e >= edge_count()) throw domain_error("unknown edge id");
  }

  std::vector<VertexLabel> labels_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> incidence_;
};

// Common valence k if the graph is regular, nullopt otherwise.
inline std::optional<int> is_regular(const MultiGraph& g) {
  if (g.vertex_count() == 0) throw domain_error("regularity of the empty graph is undefined");
  int k = g.valence(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.valence(v) != k) return std::nullopt;
  return k;
}

// Vertex -> component index; components numbered by smallest member vertex.
inline std::vector<int> component_ids(const MultiGraph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    comp[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.incident_edges(v)) {
        int w = g.other_endpoint(e, v);
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline int component_count(const MultiGraph& g) {
  if (g.vertex_count() == 0) return 0;
  std::vector<int> comp = component_ids(g);
  return 1 + *std::max_element(comp.begin(), comp.end());
}

inline bool is_connected(const MultiGraph& g) {
  return g.vertex_count() == 0 || component_count(g) == 1;
}

// Removes v and its incident edges; surviving vertices and edges keep their
// relative order.
inline MultiGraph delete_vertex(const MultiGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw domain_error("unknown vertex id");
  std::vector<int> remap(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<VertexLabel> labels;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (u == v) continue;
    remap[static_cast<std::size_t>(u)] = static_cast<int>(labels.size());
    labels.push_back(g.label(u));
  }
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    if (a == v || b == v) continue;
    edges.emplace_back(remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]);
  }
  return MultiGraph(std::move(labels), std::move(edges));
}

// Contracts edge e: its endpoints merge into the lower-id endpoint (keeping
// that label), and every edge of the contracted parallel class disappears --
// contraction never creates loops.
inline MultiGraph contract_edge(const MultiGraph& g, int e) {
  auto [u, v] = g.endpoints(e);
  int keep = std::min(u, v);
  int drop = std::max(u, v);
  std::vector<int> remap(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<VertexLabel> labels;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w == drop) continue;
    remap[static_cast<std::size_t>(w)] = static_cast<int>(labels.size());
    labels.push_back(g.label(w));
  }
  std::vector<std::pair<int, int>> edges;
  for (int f = 0; f < g.edge_count(); ++f) {
    auto [a, b] = g.endpoints(f);
    if (a == drop) a = keep;
    if (b == drop) b = keep;
    if (a == b) continue;  // the contracted class, and only it, collapses
    edges.emplace_back(remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]);
  }
  return MultiGraph(std::move(labels), std::move(edges));
}

// g then h, with h's vertex and edge ids shifted; labels are kept as-is
// (callers that need distinct copies bump the copy field first).
inline MultiGraph disjoint_union(const MultiGraph& g, const MultiGraph& h) {
  std::vector<VertexLabel> labels = g.labels();
  labels.insert(labels.end(), h.labels().begin(), h.labels().end());
  std::vector<std::pair<int, int>> edges = g.edges();
  int shift = g.vertex_count();
  for (auto [a, b] : h.edges()) edges.emplace_back(a + shift, b + shift);
  return MultiGraph(std::move(labels), std::move(edges));
}

// DOT output, vertices then edges in id order -- byte-identical across runs.
inline std::string to_dot(const MultiGraph& g) {
  std::string s = "graph {\n";
  for (int v = 0; v < g.vertex_count(); ++v) s += "  " + g.label(v).name() + ";\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    s += "  " + g.label(a).name() + " -- " + g.label(b).name() + ";\n";
  }
  s += "}\n";
  return s;
}

}  // namespace wgeo
