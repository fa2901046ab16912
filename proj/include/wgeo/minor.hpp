#pragma once

// Minor containment: randomized greedy construction backed by an exhaustive
// branch-set search.
//
// A pattern P is a minor of a host G iff G has disjoint connected branch sets
// B_v, one per pattern vertex, with at least mult_P(u, v) distinct host edges
// between B_u and B_v for every pattern pair.  Crucially, a host edge whose
// endpoints lie in B_u and B_v can only ever serve the pair (u, v), so there
// is nothing to decide about which edge serves which adjacency: a pair is
// satisfied exactly when the count of host edges between its two sets reaches
// the required multiplicity.  Both engines below rest on that fact.
//
// The greedy engine places one whole branch set per step, taking pattern
// vertices in most-constrained order (largest demand into the sets already
// placed).  Each placement prefers a single host vertex that meets every
// demand into the placed sets by itself, and otherwise grows a connected set
// from a random anchor, one vertex at a time, favouring vertices that supply
// still-missing edges.  A placement that satisfies its step keeps all earlier
// steps satisfied, so a completed run is a model (it is verified before being
// returned); any dead end abandons the attempt.  Attempts are near-linear
// time, so thousands can be tried, and on hosts that actually contain the
// pattern a modest number of randomized attempts finds a model with high
// probability even where systematic search bogs down.
//
// The systematic engine guarantees completeness.  It processes pattern pairs
// one at a time; while the current pair's count falls short, one of its two
// sets is grown by a single free host vertex (or seeded) and the pair is
// re-examined.  Cross counts are monotone along a branch, so satisfied pairs
// stay satisfied.  Growth candidates that fail are excluded from that branch
// set for the rest of the branch (each membership question is decided once
// per path, so the orderings of a growth sequence are not re-explored); a
// pair dies early when even routing every compatible host edge to it cannot
// meet its demand; a branch dies when the empty sets outnumber the free
// vertices or when the total unmet demand exceeds the count of host edges
// that still have a free endpoint (an edge with both endpoints placed either
// already crosses a pair or is stuck inside a set).
//
// contains_minor interleaves the two in rounds: a batch of greedy attempts,
// then a systematic run under a node budget, with reshuffled orders and a
// multiplied budget each round.  Only a truncated systematic run triggers
// another round — an exhausted run is a definitive "no" — and the final
// round's systematic run is unbounded, so the procedure terminates.  Seeds
// are fixed, making the whole procedure deterministic.  Still exponential in
// the worst case, hence the size caps below.

#include <cstdint>
#include <optional>
#include <vector>

#include "wgeo/multigraph.hpp"
#include "wgeo/rng.hpp"

namespace wgeo {

inline constexpr int kMaxMinorPatternVertices = 14;
inline constexpr int kMaxMinorHostVertices = 32;

struct MinorWitness {
  // branch_sets[p] lists the host vertices modelling pattern vertex p.
  std::vector<std::vector<int>> branch_sets;
};

// Branch sets must be nonempty, disjoint, induce connected subgraphs, and
// carry enough distinct host edges for every pattern adjacency.
inline bool verify_minor(const MultiGraph& host, const MultiGraph& pattern,
                         const MinorWitness& w) {
  int np = pattern.vertex_count();
  if (static_cast<int>(w.branch_sets.size()) != np) return false;
  std::vector<int> owner(static_cast<std::size_t>(host.vertex_count()), -1);
  for (int p = 0; p < np; ++p) {
    if (w.branch_sets[static_cast<std::size_t>(p)].empty()) return false;
    for (int v : w.branch_sets[static_cast<std::size_t>(p)]) {
      if (v < 0 || v >= host.vertex_count()) return false;
      if (owner[static_cast<std::size_t>(v)] != -1) return false;
      owner[static_cast<std::size_t>(v)] = p;
    }
  }
  // Connectivity of each branch set via BFS inside the set.
  for (int p = 0; p < np; ++p) {
    const auto& set = w.branch_sets[static_cast<std::size_t>(p)];
    std::vector<bool> seen(static_cast<std::size_t>(host.vertex_count()), false);
    std::vector<int> stack = {set.front()};
    seen[static_cast<std::size_t>(set.front())] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : host.incident_edges(v)) {
        int u = host.other_endpoint(e, v);
        if (owner[static_cast<std::size_t>(u)] == p && !seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          ++reached;
          stack.push_back(u);
        }
      }
    }
    if (reached != set.size()) return false;
  }
  // Count distinct host edges between each pair of branch sets.
  std::vector<std::vector<int>> cross(static_cast<std::size_t>(np),
                                      std::vector<int>(static_cast<std::size_t>(np), 0));
  for (int e = 0; e < host.edge_count(); ++e) {
    auto [a, b] = host.endpoints(e);
    int pa = owner[static_cast<std::size_t>(a)];
    int pb = owner[static_cast<std::size_t>(b)];
    if (pa != -1 && pb != -1 && pa != pb) {
      ++cross[static_cast<std::size_t>(pa)][static_cast<std::size_t>(pb)];
      ++cross[static_cast<std::size_t>(pb)][static_cast<std::size_t>(pa)];
    }
  }
  for (int u = 0; u < np; ++u)
    for (int v = u + 1; v < np; ++v)
      if (cross[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] <
          pattern.multiplicity(u, v))
        return false;
  return true;
}

namespace detail {

struct MinorSearch {
  const MultiGraph& host;
  const MultiGraph& pattern;
  int np;
  int nh;
  // demand[u][v]: distinct host edges required between B_u and B_v.
  std::vector<std::vector<int>> demand;
  // Distinct pattern pairs with positive demand, in processing order.
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> owner;     // host vertex -> pattern vertex or -1
  std::vector<int> set_size;  // vertices owned per pattern vertex
  int free_vertices = 0;
  int empty_sets = 0;
  // cross[u][v]: host edges currently running between B_u and B_v.
  std::vector<std::vector<int>> cross;
  int deficit = 0;   // demand units not yet covered by a cross edge
  int flexible = 0;  // host edges with at least one free endpoint
  std::vector<std::uint64_t> neighbor_mask;  // host adjacency as bitmasks
  std::vector<std::uint64_t> set_mask;       // branch set as a bitmask
  std::vector<std::uint64_t> blocked;        // vertices excluded per set
  std::vector<int> vertex_order;             // candidate iteration order
  std::uint64_t nodes = 0;
  std::uint64_t node_budget = 0;  // 0 means unlimited
  bool budget_hit = false;

  MinorSearch(const MultiGraph& h, const MultiGraph& p)
      : host(h), pattern(p), np(p.vertex_count()), nh(h.vertex_count()) {
    demand.assign(static_cast<std::size_t>(np), std::vector<int>(static_cast<std::size_t>(np), 0));
    for (int e = 0; e < pattern.edge_count(); ++e) {
      auto [a, b] = pattern.endpoints(e);
      ++demand[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      ++demand[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
    }
    // Engage pattern vertices one at a time: all pairs among {0..m} come
    // before any pair that touches m+1, so each new branch set must connect
    // to the finished part right away and local dead ends surface early.
    for (int m = 1; m < np; ++m)
      for (int u = 0; u < m; ++u)
        if (demand[static_cast<std::size_t>(u)][static_cast<std::size_t>(m)] > 0)
          pairs.emplace_back(u, m);
    owner.assign(static_cast<std::size_t>(nh), -1);
    set_size.assign(static_cast<std::size_t>(np), 0);
    free_vertices = nh;
    empty_sets = np;
    cross.assign(static_cast<std::size_t>(np), std::vector<int>(static_cast<std::size_t>(np), 0));
    deficit = pattern.edge_count();
    flexible = host.edge_count();
    neighbor_mask.assign(static_cast<std::size_t>(nh), 0);
    for (int e = 0; e < host.edge_count(); ++e) {
      auto [a, b] = host.endpoints(e);
      neighbor_mask[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
      neighbor_mask[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
    }
    set_mask.assign(static_cast<std::size_t>(np), 0);
    blocked.assign(static_cast<std::size_t>(np), 0);
    vertex_order.resize(static_cast<std::size_t>(nh));
    for (int v = 0; v < nh; ++v) vertex_order[static_cast<std::size_t>(v)] = v;
  }

  // Reshuffle the host-vertex iteration order and the pattern engagement
  // order that lays out `pairs`.  Used between restarts.
  void randomize(Rng& rng) {
    vertex_order = rng.permutation(static_cast<std::size_t>(nh));
    std::vector<int> engage = rng.permutation(static_cast<std::size_t>(np));
    pairs.clear();
    for (std::size_t mi = 1; mi < engage.size(); ++mi)
      for (std::size_t ui = 0; ui < mi; ++ui) {
        int u = engage[ui];
        int m = engage[mi];
        if (demand[static_cast<std::size_t>(u)][static_cast<std::size_t>(m)] > 0)
          pairs.emplace_back(u, m);
      }
  }

  void assign(int v, int p) {
    owner[static_cast<std::size_t>(v)] = p;
    set_mask[static_cast<std::size_t>(p)] |= std::uint64_t{1} << v;
    if (set_size[static_cast<std::size_t>(p)]++ == 0) --empty_sets;
    --free_vertices;
    for (int e : host.incident_edges(v)) {
      int o = owner[static_cast<std::size_t>(host.other_endpoint(e, v))];
      if (o == -1) continue;
      --flexible;  // the edge just lost its last free endpoint
      if (o != p) {
        int c = ++cross[static_cast<std::size_t>(p)][static_cast<std::size_t>(o)];
        ++cross[static_cast<std::size_t>(o)][static_cast<std::size_t>(p)];
        if (c <= demand[static_cast<std::size_t>(p)][static_cast<std::size_t>(o)]) --deficit;
      }
    }
  }

  void unassign(int v, int p) {
    owner[static_cast<std::size_t>(v)] = -1;
    set_mask[static_cast<std::size_t>(p)] &= ~(std::uint64_t{1} << v);
    if (--set_size[static_cast<std::size_t>(p)] == 0) ++empty_sets;
    ++free_vertices;
    for (int e : host.incident_edges(v)) {
      int o = owner[static_cast<std::size_t>(host.other_endpoint(e, v))];
      if (o == -1) continue;
      ++flexible;
      if (o != p) {
        int c = --cross[static_cast<std::size_t>(p)][static_cast<std::size_t>(o)];
        --cross[static_cast<std::size_t>(o)][static_cast<std::size_t>(p)];
        if (c < demand[static_cast<std::size_t>(p)][static_cast<std::size_t>(o)]) ++deficit;
      }
    }
  }

  // Satisfy pairs[i..] given the current partial model.  Cross counts only
  // grow as vertices are assigned, so pairs before i remain satisfied.
  bool solve(std::size_t i) {
    if (i == pairs.size()) return true;
    if (node_budget != 0 && ++nodes > node_budget) {
      budget_hit = true;
      return false;
    }
    if (empty_sets > free_vertices) return false;
    if (deficit > flexible) return false;
    auto [pu, pv] = pairs[i];
    int want = demand[static_cast<std::size_t>(pu)][static_cast<std::size_t>(pv)];
    if (cross[static_cast<std::size_t>(pu)][static_cast<std::size_t>(pv)] >= want)
      return solve(i + 1);

    // Even routing every compatible host edge to this pair must reach the
    // demand; otherwise no extension of the current assignment can work.
    int potential = 0;
    for (int e = 0; e < host.edge_count(); ++e) {
      auto [a, b] = host.endpoints(e);
      int oa = owner[static_cast<std::size_t>(a)];
      int ob = owner[static_cast<std::size_t>(b)];
      bool a_u = oa == pu || oa == -1;
      bool a_v = oa == pv || oa == -1;
      bool b_u = ob == pu || ob == -1;
      bool b_v = ob == pv || ob == -1;
      if ((a_u && b_v) || (a_v && b_u)) ++potential;
    }
    if (potential < want) return false;

    // Grow or seed either side by one host vertex and re-examine this pair.
    // A candidate whose branch fails is excluded from that set for the rest
    // of this branch: any model placing it there was just refuted, and the
    // exclusion stops the same grown set from being rebuilt in a different
    // order.  Candidates that raise this pair's count at once (they touch
    // the opposite set) go first.
    std::vector<std::pair<int, int>> excluded_here;
    bool found = false;
    for (int pass = 0; pass < 2 && !found; ++pass) {
      for (int side = 0; side < 2 && !found; ++side) {
        int p = side == 0 ? pu : pv;
        int other = side == 0 ? pv : pu;
        for (int vi = 0; vi < nh; ++vi) {
          int v = vertex_order[static_cast<std::size_t>(vi)];
          if (owner[static_cast<std::size_t>(v)] != -1) continue;
          if ((blocked[static_cast<std::size_t>(p)] >> v) & 1) continue;
          if (set_size[static_cast<std::size_t>(p)] > 0 &&
              (neighbor_mask[static_cast<std::size_t>(v)] & set_mask[static_cast<std::size_t>(p)]) == 0)
            continue;  // growth keeps branch sets connected; seeds are free
          bool helps_now =
              (neighbor_mask[static_cast<std::size_t>(v)] & set_mask[static_cast<std::size_t>(other)]) != 0;
          if (helps_now != (pass == 0)) continue;
          assign(v, p);
          if (solve(i)) {
            found = true;
            break;
          }
          unassign(v, p);
          blocked[static_cast<std::size_t>(p)] |= std::uint64_t{1} << v;
          excluded_here.emplace_back(p, v);
        }
      }
    }
    if (!found)
      for (auto [p, v] : excluded_here)
        blocked[static_cast<std::size_t>(p)] &= ~(std::uint64_t{1} << v);
    return found;
  }
};

// Seed any still-empty branch sets (isolated or fully satisfied pattern
// vertices) with free host vertices and read off the witness.
inline std::optional<MinorWitness> extract_witness(std::vector<int>& owner, int np, int nh) {
  MinorWitness w;
  w.branch_sets.assign(static_cast<std::size_t>(np), {});
  for (int v = 0; v < nh; ++v)
    if (owner[static_cast<std::size_t>(v)] != -1)
      w.branch_sets[static_cast<std::size_t>(owner[static_cast<std::size_t>(v)])].push_back(v);
  int next_free = 0;
  for (auto& set : w.branch_sets) {
    if (!set.empty()) continue;
    while (next_free < nh && owner[static_cast<std::size_t>(next_free)] != -1) ++next_free;
    if (next_free == nh) return std::nullopt;
    set.push_back(next_free);
    owner[static_cast<std::size_t>(next_free)] = 1000000;  // claimed
  }
  return w;
}

// One randomized greedy construction attempt; fills `owner` and returns true
// when every pattern vertex received a branch set meeting all demands into
// the sets placed before it (which makes the assignment a model).
struct GreedyModel {
  const MultiGraph& host;
  const MultiGraph& pattern;
  int np;
  int nh;
  std::vector<std::vector<int>> want;  // demand matrix, as in MinorSearch
  std::vector<int> owner;              // host vertex -> pattern vertex or -1
  std::vector<std::vector<int>> into;  // into[v][q]: edges from v to B_q
  std::vector<bool> placed;
  std::vector<int> missing;  // per placed set, edges still owed by the step

  GreedyModel(const MultiGraph& h, const MultiGraph& p)
      : host(h), pattern(p), np(p.vertex_count()), nh(h.vertex_count()) {
    want.assign(static_cast<std::size_t>(np), std::vector<int>(static_cast<std::size_t>(np), 0));
    for (int e = 0; e < pattern.edge_count(); ++e) {
      auto [a, b] = pattern.endpoints(e);
      ++want[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      ++want[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
    }
  }

  void add(int v, int p) {
    owner[static_cast<std::size_t>(v)] = p;
    for (int e : host.incident_edges(v))
      ++into[static_cast<std::size_t>(host.other_endpoint(e, v))][static_cast<std::size_t>(p)];
  }

  void remove(int v, int p) {
    owner[static_cast<std::size_t>(v)] = -1;
    for (int e : host.incident_edges(v))
      --into[static_cast<std::size_t>(host.other_endpoint(e, v))][static_cast<std::size_t>(p)];
  }

  // Recount what the set under construction still owes each placed set.
  void recount(const std::vector<int>& set, int p) {
    for (int q = 0; q < np; ++q)
      missing[static_cast<std::size_t>(q)] =
          placed[static_cast<std::size_t>(q)]
              ? want[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]
              : 0;
    for (int v : set)
      for (int e : host.incident_edges(v)) {
        int o = owner[static_cast<std::size_t>(host.other_endpoint(e, v))];
        if (o != -1 && o != p && missing[static_cast<std::size_t>(o)] > 0)
          --missing[static_cast<std::size_t>(o)];
      }
  }

  int unmet() const {
    int t = 0;
    for (int q = 0; q < np; ++q)
      if (missing[static_cast<std::size_t>(q)] > 0) t += missing[static_cast<std::size_t>(q)];
    return t;
  }

  bool attempt(Rng& rng) {
    owner.assign(static_cast<std::size_t>(nh), -1);
    into.assign(static_cast<std::size_t>(nh), std::vector<int>(static_cast<std::size_t>(np), 0));
    placed.assign(static_cast<std::size_t>(np), false);
    missing.assign(static_cast<std::size_t>(np), 0);
    std::vector<int> tiebreak = rng.permutation(static_cast<std::size_t>(np));
    for (int step = 0; step < np; ++step) {
      // Most-constrained next: largest total demand into the placed sets.
      int p = -1, best_score = -1, best_tb = -1;
      for (int q = 0; q < np; ++q) {
        if (placed[static_cast<std::size_t>(q)]) continue;
        int score = 0;
        for (int r = 0; r < np; ++r)
          if (placed[static_cast<std::size_t>(r)])
            score += want[static_cast<std::size_t>(q)][static_cast<std::size_t>(r)];
        if (score > best_score ||
            (score == best_score && tiebreak[static_cast<std::size_t>(q)] > best_tb)) {
          p = q;
          best_score = score;
          best_tb = tiebreak[static_cast<std::size_t>(q)];
        }
      }
      // A host vertex that meets every demand by itself is the best seed.
      std::vector<int> singles, frees;
      for (int v = 0; v < nh; ++v) {
        if (owner[static_cast<std::size_t>(v)] != -1) continue;
        frees.push_back(v);
        bool alone = true;
        for (int q = 0; q < np && alone; ++q)
          if (placed[static_cast<std::size_t>(q)] &&
              into[static_cast<std::size_t>(v)][static_cast<std::size_t>(q)] <
                  want[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)])
            alone = false;
        if (alone) singles.push_back(v);
      }
      bool done = false;
      if (!singles.empty()) {
        add(singles[rng.below(singles.size())], p);
        done = true;
      } else {
        // Otherwise grow a connected set from a random anchor, always taking
        // a free neighbour of the set that supplies the most missing edges.
        rng.shuffle(frees);
        int anchor_limit = static_cast<int>(frees.size()) < 3 ? static_cast<int>(frees.size()) : 3;
        for (int a_i = 0; a_i < anchor_limit && !done; ++a_i) {
          std::vector<int> set = {frees[static_cast<std::size_t>(a_i)]};
          add(set.front(), p);
          recount(set, p);
          int guard = 0;
          while (unmet() > 0 && guard++ < nh) {
            int pick = -1, pick_gain = -1;
            for (int v : frees) {
              if (owner[static_cast<std::size_t>(v)] != -1) continue;
              if (into[static_cast<std::size_t>(v)][static_cast<std::size_t>(p)] == 0)
                continue;  // keep the set connected
              int gain = 0;
              for (int e : host.incident_edges(v)) {
                int o = owner[static_cast<std::size_t>(host.other_endpoint(e, v))];
                if (o != -1 && o != p && missing[static_cast<std::size_t>(o)] > 0) ++gain;
              }
              if (gain > pick_gain) {
                pick = v;
                pick_gain = gain;
              }
              if (pick_gain > 0 && rng.below(3) == 0) break;  // vary the walks
            }
            if (pick == -1) break;
            add(pick, p);
            set.push_back(pick);
            recount(set, p);
          }
          if (unmet() == 0)
            done = true;
          else
            for (int v : set) remove(v, p);
        }
      }
      if (!done) return false;
      placed[static_cast<std::size_t>(p)] = true;
    }
    return true;
  }
};

}  // namespace detail

// Decides whether pattern is a minor of host; a positive answer carries the
// branch sets.  Isolated pattern vertices only require enough free host
// vertices, which the search handles by seeding singletons.
inline std::optional<MinorWitness> contains_minor(const MultiGraph& host,
                                                  const MultiGraph& pattern) {
  if (pattern.vertex_count() > kMaxMinorPatternVertices)
    throw domain_error("minor search capped at pattern size 14");
  if (host.vertex_count() > kMaxMinorHostVertices)
    throw domain_error("minor search capped at host size 32");
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  if (pattern.edge_count() > host.edge_count()) return std::nullopt;

  // Rounds of greedy attempts interleaved with budgeted systematic runs.
  // The first systematic run uses the natural order; later ones reshuffle.
  // A systematic run that exhausts the tree within budget is conclusive, and
  // round twelve's run is unbounded, so the loop terminates.
  Rng rng(0x9e3779b97f4a7c15ull);
  detail::GreedyModel greedy(host, pattern);
  std::uint64_t budget = 50000;
  for (int round = 0;; ++round) {
    for (int t = 0; t < 1000; ++t) {
      if (!greedy.attempt(rng)) continue;
      auto w = detail::extract_witness(greedy.owner, greedy.np, greedy.nh);
      if (w && verify_minor(host, pattern, *w)) return w;
    }
    detail::MinorSearch search(host, pattern);
    if (round > 0) search.randomize(rng);
    search.node_budget = round < 12 ? budget : 0;
    if (search.solve(0))
      return detail::extract_witness(search.owner, search.np, search.nh);
    if (!search.budget_hit) return std::nullopt;
    budget *= 4;
  }
}

}  // namespace wgeo
