#pragma once

// Edge cuts and edge connectivity via unit-capacity max-flow (Edmonds-Karp).
// Every result carries a witness: the cut edges plus the two vertex sides,
// checkable without rerunning the flow.

#include <optional>
#include <queue>
#include <vector>

#include "wgeo/multigraph.hpp"

namespace wgeo {

struct CutWitness {
  std::vector<int> edges;        // cut edge ids, ascending
  std::vector<int> side_source;  // vertices on the source side, ascending
  std::vector<int> side_other;   // the rest, ascending
};

struct CutResult {
  int size = 0;
  CutWitness witness;
};

// Checks that the witness is a genuine s-t cut: the sides partition the
// vertices, s and t sit on opposite sides, and the crossing edges are exactly
// the listed ones.
inline bool verify_cut(const MultiGraph& g, const CutWitness& w, int s, int t) {
  int n = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int v : w.side_source) {
    if (v < 0 || v >= n || side[static_cast<std::size_t>(v)] != -1) return false;
    side[static_cast<std::size_t>(v)] = 0;
  }
  for (int v : w.side_other) {
    if (v < 0 || v >= n || side[static_cast<std::size_t>(v)] != -1) return false;
    side[static_cast<std::size_t>(v)] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (side[static_cast<std::size_t>(v)] == -1) return false;
  if (s < 0 || s >= n || t < 0 || t >= n) return false;
  if (side[static_cast<std::size_t>(s)] != 0 || side[static_cast<std::size_t>(t)] != 1)
    return false;

  std::vector<bool> listed(static_cast<std::size_t>(g.edge_count()), false);
  for (int e : w.edges) {
    if (e < 0 || e >= g.edge_count() || listed[static_cast<std::size_t>(e)]) return false;
    listed[static_cast<std::size_t>(e)] = true;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    bool crosses = side[static_cast<std::size_t>(a)] != side[static_cast<std::size_t>(b)];
    if (crosses != listed[static_cast<std::size_t>(e)]) return false;
  }
  return true;
}

// Minimum number of edges separating s from t, with a realizing cut.  Each
// undirected edge is one unit of capacity in either direction (net flow in
// {-1, 0, +1}); augmenting paths are found by BFS, so the loop runs at most
// min-valence times.
inline CutResult min_edge_cut(const MultiGraph& g, int s, int t) {
  int n = g.vertex_count();
  if (s < 0 || s >= n || t < 0 || t >= n) throw domain_error("unknown vertex id");
  if (s == t) throw domain_error("min_edge_cut requires distinct vertices");

  // flow[e] is net flow from endpoints(e).first to .second.
  std::vector<int> flow(static_cast<std::size_t>(g.edge_count()), 0);
  auto residual = [&](int e, int from) {
    auto [a, b] = g.endpoints(e);
    return from == a ? 1 - flow[static_cast<std::size_t>(e)]
                     : 1 + flow[static_cast<std::size_t>(e)];
  };
  auto push = [&](int e, int from) {
    auto [a, b] = g.endpoints(e);
    flow[static_cast<std::size_t>(e)] += (from == a) ? 1 : -1;
  };

  int value = 0;
  while (true) {
    std::vector<int> via(static_cast<std::size_t>(n), -1);  // edge used to reach vertex
    std::vector<int> prev(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    q.push(s);
    prev[static_cast<std::size_t>(s)] = s;
    while (!q.empty() && prev[static_cast<std::size_t>(t)] == -1) {
      int v = q.front();
      q.pop();
      for (int e : g.incident_edges(v)) {
        int w = g.other_endpoint(e, v);
        if (prev[static_cast<std::size_t>(w)] != -1 || residual(e, v) <= 0) continue;
        prev[static_cast<std::size_t>(w)] = v;
        via[static_cast<std::size_t>(w)] = e;
        q.push(w);
      }
    }
    if (prev[static_cast<std::size_t>(t)] == -1) {
      // No augmenting path: the residual-reachable set is the source side of
      // a minimum cut.
      CutResult result;
      result.size = value;
      for (int v = 0; v < n; ++v)
        (prev[static_cast<std::size_t>(v)] != -1 ? result.witness.side_source
                                                 : result.witness.side_other)
            .push_back(v);
      std::vector<bool> on_source(static_cast<std::size_t>(n), false);
      for (int v : result.witness.side_source) on_source[static_cast<std::size_t>(v)] = true;
      for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (on_source[static_cast<std::size_t>(a)] != on_source[static_cast<std::size_t>(b)])
          result.witness.edges.push_back(e);
      }
      return result;
    }
    for (int v = t; v != s; v = prev[static_cast<std::size_t>(v)])
      push(via[static_cast<std::size_t>(v)], prev[static_cast<std::size_t>(v)]);
    ++value;
  }
}

struct ConnectivityResult {
  int value = 0;
  CutWitness witness;
};

// Global edge connectivity: minimum over t of min_edge_cut(v0, t).  Any
// minimum cut separates v0 from some vertex, so scanning one fixed source
// suffices.  Disconnected graphs yield 0 with the component partition as
// witness.
inline ConnectivityResult edge_connectivity(const MultiGraph& g) {
  if (g.vertex_count() < 2)
    throw domain_error("edge connectivity needs at least two vertices");

  std::vector<int> comp = component_ids(g);
  ConnectivityResult best;
  if (*std::max_element(comp.begin(), comp.end()) > 0) {
    best.value = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
      (comp[static_cast<std::size_t>(v)] == 0 ? best.witness.side_source
                                              : best.witness.side_other)
          .push_back(v);
    return best;
  }

  best.value = -1;
  for (int t = 1; t < g.vertex_count(); ++t) {
    CutResult cut = min_edge_cut(g, 0, t);
    if (best.value == -1 || cut.size < best.value) {
      best.value = cut.size;
      best.witness = cut.witness;
      if (best.value == 0) break;
    }
  }
  return best;
}

inline bool is_k_edge_connected(const MultiGraph& g, int k) {
  if (k < 0) throw domain_error("connectivity threshold must be >= 0");
  if (k == 0) return true;
  return edge_connectivity(g).value >= k;
}

}  // namespace wgeo
