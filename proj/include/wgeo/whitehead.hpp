#pragma once

// Whitehead graphs of cyclic word collections, minimization, orbits, and the
// graph-level surgery matching a multiplier move.
//
// The Whitehead graph W(ws) has one vertex per letter (2n vertices, in letter
// order a, A, b, B, ...) and, for every two-letter cyclic subsequence xy of a
// word, an edge joining x^-1 to y.  A length-one word x contributes the edge
// x^-1 -- x.  Edges never form loops because words are cyclically reduced,
// and the number of edges equals the total length of the collection.
//
// Minimization leans on two facts:
//   - if some pair (x, x^-1) admits a cut smaller than its valence, a
//     multiplier move built from the cut side strictly shortens the
//     collection, and conversely a minimum-length collection admits no such
//     pair;
//   - greedy descent over the full Whitehead set reaches the global minimum
//     (no strictly shorter collection is reachable once no single move
//     shortens), so the fixed point of first-improvement descent is minimal.

#include <map>
#include <set>
#include <vector>

#include "wgeo/automorphism.hpp"
#include "wgeo/cuts.hpp"
#include "wgeo/multigraph.hpp"
#include "wgeo/word.hpp"

namespace wgeo {

// 2n vertices in letter-code order (vertex id == letter code), then one edge
// per cyclic position of each word, words in collection order.
inline MultiGraph build_whitehead_graph(std::span<const CyclicWord> ws,
                                        const Alphabet& alphabet) {
  require_within(ws, alphabet);
  std::vector<VertexLabel> labels;
  for (int g = 0; g < alphabet.rank; ++g) {
    labels.push_back(VertexLabel{g, 1, 0});
    labels.push_back(VertexLabel{g, -1, 0});
  }
  std::vector<std::pair<int, int>> edges;
  for (const CyclicWord& w : ws) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Letter& x = w[i];
      const Letter& y = w.at_cyclic(i + 1);
      edges.emplace_back(x.inverse().code(), y.code());
    }
  }
  return MultiGraph(std::move(labels), std::move(edges));
}

// True iff g has the shape build_whitehead_graph produces: an even vertex
// count with labels in letter-code order, all copy 0.
inline bool has_whitehead_shape(const MultiGraph& g) {
  int n = g.vertex_count();
  if (n == 0 || n % 2 != 0) return false;
  for (int v = 0; v < n; ++v) {
    const VertexLabel& l = g.label(v);
    if (l.copy != 0 || l.letter().code() != v) return false;
  }
  return true;
}

inline void require_whitehead_shape(const MultiGraph& g) {
  if (!has_whitehead_shape(g))
    throw domain_error("graph does not have Whitehead-graph vertex labels");
}

struct ReduciblePair {
  int generator = -1;  // the pair (x, x^-1)
  int valence = 0;     // common valence k of the pair
  CutWitness cut;      // a cut of size < k separating x from x^-1
};

// Scans generator pairs in order for a cut between x and x^-1 smaller than
// the pair's valence.  Valence-0 (unused) pairs are skipped.  Whitehead
// graphs of minimum-length collections never have such a pair.
inline std::optional<ReduciblePair> find_reducible_pair(const MultiGraph& g) {
  require_whitehead_shape(g);
  int rank = g.vertex_count() / 2;
  for (int gen = 0; gen < rank; ++gen) {
    int pos = 2 * gen, neg = 2 * gen + 1;
    int k = g.valence(pos);
    if (k == 0) continue;
    CutResult cut = min_edge_cut(g, pos, neg);
    if (cut.size < k) {
      ReduciblePair r;
      r.generator = gen;
      r.valence = k;
      r.cut = std::move(cut.witness);
      return r;
    }
  }
  return std::nullopt;
}

struct ReduceResult {
  std::vector<CyclicWord> words;                    // the minimal collection
  std::vector<WhiteheadAutomorphism> automorphisms;  // applied in order
};

// First-improvement descent: apply the first enumerated automorphism that
// strictly shortens the collection, repeat until none does.  The fixed point
// is cross-checked against the graph criterion -- a remaining reducible pair
// would mean the two characterizations of minimality disagree.
inline ReduceResult whitehead_reduce(std::span<const CyclicWord> ws, const Alphabet& alphabet) {
  if (ws.empty()) throw domain_error("cannot minimize an empty collection");
  require_within(ws, alphabet);
  std::vector<WhiteheadAutomorphism> moves = enumerate_whitehead_automorphisms(alphabet);

  ReduceResult result;
  result.words.assign(ws.begin(), ws.end());
  bool improved = true;
  while (improved) {
    improved = false;
    std::size_t current = total_length(result.words);
    for (const WhiteheadAutomorphism& phi : moves) {
      std::vector<CyclicWord> image = apply_automorphism(phi, result.words);
      if (total_length(image) < current) {
        result.words = std::move(image);
        result.automorphisms.push_back(phi);
        improved = true;
        break;
      }
    }
  }

  if (find_reducible_pair(build_whitehead_graph(result.words, alphabet)))
    throw domain_error(
        "internal inconsistency: descent fixed point still has a reducible pair");
  return result;
}

// One orbit element: its words (sorted), plus the move that produced it from
// its parent, for replaying automorphism paths.
struct OrbitNode {
  std::vector<CyclicWord> words;
  int parent = -1;   // index into the visit order, -1 for the root
  int move = -1;     // index into the enumerated Whitehead set, -1 for the root
};

struct OrbitResult {
  std::vector<OrbitNode> nodes;  // in visit order; nodes[0] is the root
  bool truncated = false;        // true iff the cap stopped the search
};

// Breadth-first closure of the minimal collection under length-preserving
// enumerated moves, keeping collections in sorted canonical form.  The
// visitor sees each node once, in visit order, and may stop the search by
// returning false.  Because the input must already be minimal, any strictly
// shorter image signals a precondition violation.
template <typename Visitor>
inline OrbitResult orbit_scan(std::span<const CyclicWord> ws, const Alphabet& alphabet,
                              std::size_t cap, Visitor&& visit) {
  if (cap < 1) throw domain_error("orbit cap must be at least 1");
  if (ws.empty()) throw domain_error("cannot scan the orbit of an empty collection");
  require_within(ws, alphabet);
  std::vector<WhiteheadAutomorphism> moves = enumerate_whitehead_automorphisms(alphabet);
  std::size_t base_length = total_length(ws);

  OrbitResult result;
  std::set<std::vector<CyclicWord>> seen;
  OrbitNode root;
  root.words = sorted_collection(ws);
  seen.insert(root.words);
  result.nodes.push_back(std::move(root));
  if (!visit(result.nodes[0])) return result;

  for (std::size_t head = 0; head < result.nodes.size(); ++head) {
    // Copy: growing the node vector would invalidate a reference.
    std::vector<CyclicWord> base = result.nodes[head].words;
    for (std::size_t m = 0; m < moves.size(); ++m) {
      std::vector<CyclicWord> image = sorted_collection(apply_automorphism(moves[m], base));
      std::size_t len = total_length(image);
      if (len < base_length)
        throw domain_error("orbit scan requires a minimal collection");
      if (len > base_length) continue;
      if (!seen.insert(image).second) continue;
      if (result.nodes.size() == cap) {
        result.truncated = true;
        return result;
      }
      OrbitNode node;
      node.words = std::move(image);
      node.parent = static_cast<int>(head);
      node.move = static_cast<int>(m);
      result.nodes.push_back(std::move(node));
      if (!visit(result.nodes.back())) return result;
    }
  }
  return result;
}

// The full (capped) orbit of a minimal collection.
inline OrbitResult minimal_orbit(std::span<const CyclicWord> ws, const Alphabet& alphabet,
                                 std::size_t cap) {
  return orbit_scan(ws, alphabet, cap, [](const OrbitNode&) { return true; });
}

// Moves (indices into the enumerated Whitehead set) leading from the root to
// node index i.
inline std::vector<int> orbit_path(const OrbitResult& orbit, int i) {
  std::vector<int> path;
  while (i > 0) {
    path.push_back(orbit.nodes[static_cast<std::size_t>(i)].move);
    i = orbit.nodes[static_cast<std::size_t>(i)].parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Graph-level surgery at the pair (x, x^-1) along a cut: sever the cut edges,
// route each side's stubs to a fresh vertex of the pair, and splice the two
// halves back together by matching the incidence lists of x and x^-1 in edge
// order.  The result has E - k + s edges (k the pair valence, s the cut
// size) and Whitehead shape again -- the counterpart of applying a multiplier
// move to the words.
inline MultiGraph graph_whitehead_move(const MultiGraph& g, int generator,
                                       const CutWitness& cut) {
  require_whitehead_shape(g);
  int rank = g.vertex_count() / 2;
  if (generator < 0 || generator >= rank) throw domain_error("unknown generator pair");
  int pos = 2 * generator, neg = 2 * generator + 1;
  int k = g.valence(pos);
  if (g.valence(neg) != k)
    throw domain_error("pair valences differ; not a Whitehead graph");
  if (!verify_cut(g, cut, pos, neg))
    throw domain_error("cut witness does not separate the pair");
  int s = static_cast<int>(cut.edges.size());
  if (s >= k) throw domain_error("cut is not smaller than the pair valence");

  std::vector<bool> is_cut(static_cast<std::size_t>(g.edge_count()), false);
  for (int e : cut.edges) is_cut[static_cast<std::size_t>(e)] = true;
  std::vector<bool> on_side(static_cast<std::size_t>(g.vertex_count()), false);
  for (int v : cut.side_source) on_side[static_cast<std::size_t>(v)] = true;
  // Orient the witness so that the side containing x is "S".
  if (!on_side[static_cast<std::size_t>(pos)])
    for (std::size_t v = 0; v < on_side.size(); ++v) on_side[v] = !on_side[v];

  // Fresh pair vertices get temporary out-of-range ids while the old pair is
  // still present (a cut edge may touch x or x^-1 itself); they take over the
  // x^-1 and x slots at the end.  S-side stubs attach to the fresh x^-1.
  int fresh_for_s = g.vertex_count();
  int fresh_for_t = g.vertex_count() + 1;

  // Working edge list: uncut edges unchanged, then each cut edge severed into
  // an S-side and a far-side stub.
  std::vector<std::pair<int, int>> work;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (is_cut[static_cast<std::size_t>(e)]) continue;
    work.push_back(g.endpoints(e));
  }
  for (int e : cut.edges) {
    auto [a, b] = g.endpoints(e);
    int s_end = on_side[static_cast<std::size_t>(a)] ? a : b;
    int t_end = on_side[static_cast<std::size_t>(a)] ? b : a;
    work.emplace_back(s_end, fresh_for_s);
    work.emplace_back(t_end, fresh_for_t);
  }

  // Incidence lists of x and x^-1 within the working list, in working order.
  std::vector<int> at_pos, at_neg;
  for (std::size_t e = 0; e < work.size(); ++e) {
    if (work[e].first == pos || work[e].second == pos) at_pos.push_back(static_cast<int>(e));
    if (work[e].first == neg || work[e].second == neg) at_neg.push_back(static_cast<int>(e));
  }
  // x keeps its k original edges (cut edges at x were severed to stubs at
  // x^-1's slot... count check keeps us honest).
  if (static_cast<int>(at_pos.size()) != k || static_cast<int>(at_neg.size()) != k)
    throw domain_error("internal inconsistency: severed incidence lists are unbalanced");

  auto other_end = [&](std::size_t e, int v) {
    return work[e].first == v ? work[e].second : work[e].first;
  };
  std::vector<std::pair<int, int>> joined;
  std::vector<bool> drop(work.size(), false);
  for (int i = 0; i < k; ++i) {
    std::size_t e1 = static_cast<std::size_t>(at_pos[static_cast<std::size_t>(i)]);
    std::size_t e2 = static_cast<std::size_t>(at_neg[static_cast<std::size_t>(i)]);
    joined.emplace_back(other_end(e1, pos), other_end(e2, neg));
    drop[e1] = true;
    drop[e2] = true;
  }

  std::vector<std::pair<int, int>> edges;
  for (std::size_t e = 0; e < work.size(); ++e)
    if (!drop[e]) edges.push_back(work[e]);
  edges.insert(edges.end(), joined.begin(), joined.end());

  // The old pair ids are now unused; move the fresh pair into their slots.
  for (auto& [a, b] : edges) {
    if (a == fresh_for_s) a = neg;
    if (a == fresh_for_t) a = pos;
    if (b == fresh_for_s) b = neg;
    if (b == fresh_for_t) b = pos;
  }
  MultiGraph out(g.labels(), std::move(edges));
  if (out.edge_count() != g.edge_count() - k + s)
    throw domain_error("internal inconsistency: move changed the edge count incorrectly");
  return out;
}

}  // namespace wgeo
