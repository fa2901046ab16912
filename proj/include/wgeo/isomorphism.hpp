#pragma once

// Multigraph isomorphism (labels ignored, multiplicities respected) by
// backtracking over valence-compatible assignments.  Intended for the small
// graphs that appear here; both inputs are capped at 32 vertices.

#include <optional>
#include <vector>

#include "wgeo/multigraph.hpp"

namespace wgeo {

inline constexpr int kMaxIsomorphismVertices = 32;

namespace detail {

inline std::vector<std::vector<int>> multiplicity_matrix(const MultiGraph& g) {
  std::size_t n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    ++m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    ++m[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
  }
  return m;
}

}  // namespace detail

// Vertex bijection g -> h preserving edge multiplicities, or nullopt.
inline std::optional<std::vector<int>> find_isomorphism(const MultiGraph& g,
                                                        const MultiGraph& h) {
  if (g.vertex_count() > kMaxIsomorphismVertices || h.vertex_count() > kMaxIsomorphismVertices)
    throw domain_error("isomorphism search capped at 32 vertices");
  int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;

  std::vector<int> gv, hv;
  for (int v = 0; v < n; ++v) gv.push_back(g.valence(v));
  for (int v = 0; v < n; ++v) hv.push_back(h.valence(v));
  {
    std::vector<int> a = gv, b = hv;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<std::vector<int>> gm = detail::multiplicity_matrix(g);
  std::vector<std::vector<int>> hm = detail::multiplicity_matrix(h);

  // Assign high-valence vertices first; they are the most constrained.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return gv[static_cast<std::size_t>(a)] > gv[static_cast<std::size_t>(b)]; });

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  auto backtrack = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    int u = order[depth];
    for (int x = 0; x < n; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      if (hv[static_cast<std::size_t>(x)] != gv[static_cast<std::size_t>(u)]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth; ++d) {
        int v = order[d];
        if (gm[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] !=
            hm[static_cast<std::size_t>(x)][static_cast<std::size_t>(image[static_cast<std::size_t>(v)])]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(u)] = x;
      used[static_cast<std::size_t>(x)] = true;
      if (self(self, depth + 1)) return true;
      used[static_cast<std::size_t>(x)] = false;
      image[static_cast<std::size_t>(u)] = -1;
    }
    return false;
  };
  if (!backtrack(backtrack, 0)) return std::nullopt;
  return image;
}

inline bool is_isomorphic(const MultiGraph& g, const MultiGraph& h) {
  return find_isomorphism(g, h).has_value();
}

// Checks a claimed bijection: every pair multiplicity must match.
inline bool verify_isomorphism(const MultiGraph& g, const MultiGraph& h,
                               const std::vector<int>& image) {
  int n = g.vertex_count();
  if (h.vertex_count() != n || static_cast<int>(image.size()) != n) return false;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int x : image) {
    if (x < 0 || x >= n || used[static_cast<std::size_t>(x)]) return false;
    used[static_cast<std::size_t>(x)] = true;
  }
  std::vector<std::vector<int>> gm = detail::multiplicity_matrix(g);
  std::vector<std::vector<int>> hm = detail::multiplicity_matrix(h);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (gm[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] !=
          hm[static_cast<std::size_t>(image[static_cast<std::size_t>(u)])]
            [static_cast<std::size_t>(image[static_cast<std::size_t>(v)])])
        return false;
  return true;
}

}  // namespace wgeo
