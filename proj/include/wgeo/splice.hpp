#pragma once

// Splicing graphs at same-valence vertices, finite-cover simulation, and
// random regular test graphs.
//
// A splice deletes one vertex from each graph and joins the severed edge ends
// across the gap by a bijection sigma.  Vertex and edge counts obey
// |V| = |V1| + |V2| - 2 and |E| = |E1| + |E2| - k for pair valence k.  The
// cover simulation lays down d copies of a Whitehead graph and performs
// exactly d - 1 splices joining distinct components, each at a pair of
// same-generator, opposite-sign vertices (the shape of vertex fibers over a
// double cover); labels keep the copy index so provenance stays visible.

#include <cstdint>
#include <vector>

#include "wgeo/cuts.hpp"
#include "wgeo/multigraph.hpp"
#include "wgeo/rng.hpp"
#include "wgeo/whitehead.hpp"

namespace wgeo {

namespace detail {

// Splices two vertices of one graph (assumed to lie in distinct components or
// at least to be distinct and of equal valence): both vertices disappear and
// the i-th edge at v1 (edge-id order) joins to the sigma[i]-th edge at v2.
inline MultiGraph splice_vertices(const MultiGraph& g, int v1, int v2,
                                  std::span<const int> sigma) {
  if (v1 == v2) throw domain_error("splice vertices must be distinct");
  int k = g.valence(v1);
  if (g.valence(v2) != k) throw domain_error("splice vertices must have equal valence");
  if (static_cast<int>(sigma.size()) != k)
    throw domain_error("splice bijection has the wrong size");
  std::vector<bool> hit(sigma.size(), false);
  for (int s : sigma) {
    if (s < 0 || s >= k || hit[static_cast<std::size_t>(s)])
      throw domain_error("splice bijection is not a permutation");
    hit[static_cast<std::size_t>(s)] = true;
  }
  const std::vector<int>& at1 = g.incident_edges(v1);
  const std::vector<int>& at2 = g.incident_edges(v2);
  for (int e : at1)
    if (g.other_endpoint(e, v1) == v2)
      throw domain_error("splice vertices must not be adjacent");

  std::vector<int> remap(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<VertexLabel> labels;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == v1 || v == v2) continue;
    remap[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> incident(static_cast<std::size_t>(g.edge_count()), false);
  for (int e : at1) incident[static_cast<std::size_t>(e)] = true;
  for (int e : at2) incident[static_cast<std::size_t>(e)] = true;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (incident[static_cast<std::size_t>(e)]) continue;
    auto [a, b] = g.endpoints(e);
    edges.emplace_back(remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]);
  }
  for (int i = 0; i < k; ++i) {
    int a = g.other_endpoint(at1[static_cast<std::size_t>(i)], v1);
    int b = g.other_endpoint(at2[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])], v2);
    edges.emplace_back(remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]);
  }
  return MultiGraph(std::move(labels), std::move(edges));
}

}  // namespace detail

struct SpliceInstruction {
  int first_vertex = -1;   // vertex of the first graph
  int second_vertex = -1;  // vertex of the second graph
  // sigma[i]: position (in edge-id order) of the second vertex's edge joined
  // to the i-th edge of the first vertex.
  std::vector<int> sigma;
};

// Splices two graphs; the second graph's labels get fresh copy indices so the
// result still names every vertex unambiguously.
inline MultiGraph splice(const MultiGraph& g1, const MultiGraph& g2,
                         const SpliceInstruction& instr) {
  if (instr.first_vertex < 0 || instr.first_vertex >= g1.vertex_count() ||
      instr.second_vertex < 0 || instr.second_vertex >= g2.vertex_count())
    throw domain_error("splice vertex out of range");
  int max_copy = 0;
  for (const VertexLabel& l : g1.labels()) max_copy = std::max(max_copy, l.copy);
  std::vector<VertexLabel> shifted = g2.labels();
  for (VertexLabel& l : shifted) l.copy += max_copy + 1;
  MultiGraph both = disjoint_union(g1, MultiGraph(std::move(shifted), g2.edges()));
  return detail::splice_vertices(both, instr.first_vertex,
                                 g1.vertex_count() + instr.second_vertex, instr.sigma);
}

struct CoverTrace {
  MultiGraph graph;
  // One entry per splice: the two vertex names joined and the sigma used.
  struct Step {
    std::string first;
    std::string second;
    std::vector<int> sigma;
  };
  std::vector<Step> steps;
};

// Lays down d copies of a Whitehead graph and splices them together with
// d - 1 random cross-component splices.  With label_matched set (the cover
// shape), splice sites pair a vertex x^e with some x^-e from another
// component; otherwise any cross-component same-valence pair qualifies.
// Candidate pairs and sigmas are drawn from the seeded stream, so equal seeds
// reproduce the graph byte for byte.
inline CoverTrace simulate_cover(const MultiGraph& w_graph, int d, std::uint64_t seed,
                                 bool label_matched = true) {
  require_whitehead_shape(w_graph);
  if (d < 1) throw domain_error("cover sheet count must be >= 1");

  MultiGraph g;
  for (int c = 0; c < d; ++c) {
    std::vector<VertexLabel> labels = w_graph.labels();
    for (VertexLabel& l : labels) l.copy = c;
    g = disjoint_union(g, MultiGraph(std::move(labels), w_graph.edges()));
  }

  Rng rng(seed);
  CoverTrace trace;
  for (int round = 0; round < d - 1; ++round) {
    std::vector<int> comp = component_ids(g);
    std::vector<std::pair<int, int>> candidates;
    for (int v1 = 0; v1 < g.vertex_count(); ++v1) {
      for (int v2 = v1 + 1; v2 < g.vertex_count(); ++v2) {
        if (comp[static_cast<std::size_t>(v1)] == comp[static_cast<std::size_t>(v2)]) continue;
        if (g.valence(v1) == 0 || g.valence(v1) != g.valence(v2)) continue;
        if (label_matched) {
          const VertexLabel& a = g.label(v1);
          const VertexLabel& b = g.label(v2);
          if (a.generator != b.generator || a.sign == b.sign) continue;
        }
        candidates.emplace_back(v1, v2);
      }
    }
    if (candidates.empty())
      throw domain_error("no admissible splice site between components");
    auto [v1, v2] = candidates[rng.below(candidates.size())];
    std::vector<int> sigma = rng.permutation(static_cast<std::size_t>(g.valence(v1)));
    CoverTrace::Step step;
    step.first = g.label(v1).name();
    step.second = g.label(v2).name();
    step.sigma = sigma;
    trace.steps.push_back(std::move(step));
    g = detail::splice_vertices(g, v1, v2, sigma);
  }
  trace.graph = std::move(g);
  return trace;
}

// Random connected k-valent multigraph on n vertices by the pairing model:
// scatter k points per vertex, pair them up at random, reject draws with
// loops or too little connectivity.  Parallel edges are allowed.  Labels are
// x_1 ... x_n positive, copy 0.
inline MultiGraph random_regular_connected_graph(int n, int k, std::uint64_t seed) {
  if (n < 2 || k < 1) throw domain_error("need n >= 2 vertices and valence k >= 1");
  if ((n * k) % 2 != 0)
    throw domain_error("n * k must be even (handshake parity)");
  if (n < k + 1)
    throw domain_error("need n >= k + 1 vertices for a k-valent sample");

  Rng rng(seed);
  constexpr int kAttempts = 10000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<int> points(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < points.size(); ++i)
      points[i] = static_cast<int>(i) / k;  // owner vertex of each point
    rng.shuffle(points);
    bool ok = true;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
      if (points[i] == points[i + 1]) {
        ok = false;  // a loop; reject the whole pairing
        break;
      }
      edges.emplace_back(points[i], points[i + 1]);
    }
    if (!ok) continue;
    std::vector<VertexLabel> labels;
    for (int v = 0; v < n; ++v) labels.push_back(VertexLabel{v, 1, 0});
    MultiGraph g(std::move(labels), std::move(edges));
    if (edge_connectivity(g).value >= k) return g;
  }
  throw domain_error("rejection budget exhausted while sampling a regular graph");
}

}  // namespace wgeo
