#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wgeo/isomorphism.hpp"
#include "wgeo/minor.hpp"
#include "wgeo/planarity.hpp"
#include "wgeo/splice.hpp"
#include "wgeo/whitehead.hpp"

using namespace wgeo;

namespace {

MultiGraph k33_whitehead() {
  return build_whitehead_graph(parse_collection("bbaaccabc", Alphabet(3)), Alphabet(3));
}

}  // namespace

TEST_CASE("splice of two cycles is one long cycle") {
  MultiGraph c4 = oracle::cycle_graph(4);
  for (std::vector<int> sigma : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
    SpliceInstruction instr;
    instr.first_vertex = 0;
    instr.second_vertex = 0;
    instr.sigma = sigma;
    MultiGraph out = splice(c4, c4, instr);
    CHECK(out.vertex_count() == 6);
    CHECK(out.edge_count() == 6);
    CHECK(is_isomorphic(out, oracle::cycle_graph(6)));
  }
}

TEST_CASE("splice of two single edges is a single edge") {
  MultiGraph edge = oracle::path_graph(2);
  SpliceInstruction instr;
  instr.first_vertex = 0;
  instr.second_vertex = 0;
  instr.sigma = {0};
  MultiGraph out = splice(edge, edge, instr);
  CHECK(out.vertex_count() == 2);
  CHECK(out.edge_count() == 1);
}

TEST_CASE("splice of two K33-shaped graphs") {
  MultiGraph w = k33_whitehead();
  SpliceInstruction instr;
  instr.first_vertex = 0;  // vertex a
  instr.second_vertex = 1; // vertex A of the second copy
  instr.sigma = {2, 0, 1};
  MultiGraph out = splice(w, w, instr);
  CHECK(out.vertex_count() == 10);
  CHECK(out.edge_count() == 15);
  CHECK(is_regular(out) == std::optional<int>(3));
  // Copy indices keep the two sheets distinguishable.
  int shifted = 0;
  for (const VertexLabel& l : out.labels())
    if (l.copy > 0) ++shifted;
  CHECK(shifted == 5);
}

TEST_CASE("splice input validation") {
  MultiGraph c4 = oracle::cycle_graph(4);
  MultiGraph w = k33_whitehead();
  SpliceInstruction instr;
  instr.first_vertex = 0;
  instr.second_vertex = 0;
  instr.sigma = {0, 1};
  // Valence mismatch (2 vs 3).
  CHECK_THROWS_AS(splice(c4, w, instr), domain_error);
  // Wrong sigma size.
  instr.sigma = {0};
  CHECK_THROWS_AS(splice(c4, c4, instr), domain_error);
  // Not a permutation.
  instr.sigma = {0, 0};
  CHECK_THROWS_AS(splice(c4, c4, instr), domain_error);
  // Out of range vertex.
  instr.sigma = {0, 1};
  instr.first_vertex = 9;
  CHECK_THROWS_AS(splice(c4, c4, instr), domain_error);
}

TEST_CASE("in-graph splice rejects adjacent vertices") {
  MultiGraph c4 = oracle::cycle_graph(4);
  std::vector<int> sigma = {0, 1};
  CHECK_THROWS_AS(detail::splice_vertices(c4, 0, 1, sigma), domain_error);
  // Opposite corners are fine under the crossing pairing and give a doubled
  // edge (the identity pairing would ask for loops, which graphs here forbid).
  std::vector<int> crossing = {1, 0};
  MultiGraph out = detail::splice_vertices(c4, 0, 2, crossing);
  CHECK(out.vertex_count() == 2);
  CHECK(out.edge_count() == 2);
  std::vector<int> looping = {0, 1};
  CHECK_THROWS_AS(detail::splice_vertices(c4, 0, 2, looping), domain_error);
}

TEST_CASE("splices preserve valence, connectivity, and minors") {
  // Random k-valent k-edge-connected graphs stay k-valent and k-edge-connected
  // under splices, and the first factor survives as a minor whenever the
  // second factor minus its splice vertex is connected.
  int minor_checked = 0;
  for (int trial = 0; trial < 24; ++trial) {
    int k = 3 + trial % 3;
    std::uint64_t seed = 900 + static_cast<std::uint64_t>(trial);
    Rng rng(seed);
    int n1 = k + 1 + static_cast<int>(rng.below(3));
    int n2 = k + 1 + static_cast<int>(rng.below(3));
    if ((n1 * k) % 2 != 0) ++n1;
    if ((n2 * k) % 2 != 0) ++n2;
    MultiGraph g1 = random_regular_connected_graph(n1, k, seed * 5 + 1);
    MultiGraph g2 = random_regular_connected_graph(n2, k, seed * 5 + 2);
    SpliceInstruction instr;
    instr.first_vertex = static_cast<int>(rng.below(static_cast<std::size_t>(n1)));
    instr.second_vertex = static_cast<int>(rng.below(static_cast<std::size_t>(n2)));
    instr.sigma = rng.permutation(static_cast<std::size_t>(k));
    MultiGraph out = splice(g1, g2, instr);

    CHECK(out.vertex_count() == n1 + n2 - 2);
    CHECK(out.edge_count() == g1.edge_count() + g2.edge_count() - k);
    CHECK(is_regular(out) == std::optional<int>(k));
    CHECK(edge_connectivity(out).value == k);

    MultiGraph cut_down = delete_vertex(g2, instr.second_vertex);
    if (is_connected(cut_down)) {
      auto witness = contains_minor(out, g1);
      REQUIRE(witness.has_value());
      CHECK(verify_minor(out, g1, *witness));
      ++minor_checked;
    }
  }
  CHECK(minor_checked >= 10);
}

TEST_CASE("cover simulation with one sheet is the base graph") {
  MultiGraph w = k33_whitehead();
  CoverTrace trace = simulate_cover(w, 1, 42);
  CHECK(trace.steps.empty());
  CHECK(to_dot(trace.graph) == to_dot(w));
}

TEST_CASE("cover simulation is deterministic in the seed") {
  MultiGraph w = k33_whitehead();
  CoverTrace a = simulate_cover(w, 3, 7);
  CoverTrace b = simulate_cover(w, 3, 7);
  CHECK(to_dot(a.graph) == to_dot(b.graph));
  REQUIRE(a.steps.size() == 2);
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    CHECK(a.steps[i].first == b.steps[i].first);
    CHECK(a.steps[i].second == b.steps[i].second);
    CHECK(a.steps[i].sigma == b.steps[i].sigma);
  }
}

TEST_CASE("two-sheet cover of the K33-shaped graph") {
  MultiGraph w = k33_whitehead();
  CoverTrace trace = simulate_cover(w, 2, 2026);
  const MultiGraph& g = trace.graph;
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 15);
  CHECK(is_regular(g) == std::optional<int>(3));
  CHECK(is_connected(g));
  CHECK(edge_connectivity(g).value == 3);
  CHECK(!is_planar(g).planar);
  auto witness = contains_minor(g, oracle::complete_bipartite(3, 3));
  REQUIRE(witness.has_value());
  CHECK(verify_minor(g, oracle::complete_bipartite(3, 3), *witness));
  // Label-matched splicing keeps positive and negative vertices balanced.
  for (int gen = 0; gen < 3; ++gen) {
    int pos = 0, neg = 0;
    for (const VertexLabel& l : g.labels()) {
      if (l.generator != gen) continue;
      (l.sign > 0 ? pos : neg)++;
    }
    CHECK(pos == neg);
  }
  // Each splice joined a letter to its inverse across sheets.
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].sigma.size() == 3);
}

TEST_CASE("three-sheet cover of a circle graph is a long circle") {
  MultiGraph w = build_whitehead_graph(parse_collection("abAB", Alphabet(2)), Alphabet(2));
  for (std::uint64_t seed : {1ULL, 9ULL, 77ULL}) {
    CoverTrace trace = simulate_cover(w, 3, seed);
    CHECK(is_isomorphic(trace.graph, oracle::cycle_graph(8)));
  }
}

TEST_CASE("cover simulation needs admissible splice sites") {
  // An edgeless two-vertex graph has no usable vertices to splice.
  MultiGraph bare({VertexLabel{0, 1, 0}, VertexLabel{0, -1, 0}}, {});
  CHECK(has_whitehead_shape(bare));
  CHECK_THROWS_WITH(simulate_cover(bare, 2, 5),
                    Catch::Matchers::ContainsSubstring("no admissible splice site"));
  CHECK_THROWS_AS(simulate_cover(bare, 0, 5), domain_error);
  // Non-Whitehead-shaped inputs are rejected up front.
  CHECK_THROWS_AS(simulate_cover(oracle::cycle_graph(4), 2, 5), domain_error);
}

TEST_CASE("random regular connected graphs") {
  MultiGraph g = random_regular_connected_graph(6, 3, 11);
  CHECK(g.vertex_count() == 6);
  CHECK(is_regular(g) == std::optional<int>(3));
  CHECK(edge_connectivity(g).value == 3);

  MultiGraph h = random_regular_connected_graph(4, 3, 12);
  CHECK(h.vertex_count() == 4);
  CHECK(is_regular(h) == std::optional<int>(3));

  // Same seed, same graph.
  CHECK(to_dot(random_regular_connected_graph(8, 4, 99)) ==
        to_dot(random_regular_connected_graph(8, 4, 99)));

  CHECK_THROWS_AS(random_regular_connected_graph(3, 3, 1), domain_error);   // n < k + 1
  CHECK_THROWS_AS(random_regular_connected_graph(5, 3, 1), domain_error);   // parity
  CHECK_THROWS_AS(random_regular_connected_graph(2, 2, 1), domain_error);   // n < k + 1
  CHECK_THROWS_AS(random_regular_connected_graph(1, 2, 1), domain_error);   // n < 2
  CHECK_THROWS_AS(random_regular_connected_graph(4, 0, 1), domain_error);   // k < 1
}

TEST_CASE("rng primitives") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) CHECK(rng.below(7) < 7);
  std::vector<int> perm = rng.permutation(10);
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 10; ++i) CHECK(sorted[static_cast<std::size_t>(i)] == i);
  // Equal seeds give equal streams.
  Rng a(123), b(123);
  for (int i = 0; i < 50; ++i) CHECK(a.next() == b.next());
  CHECK(std::string(kRngAlgorithm) == "mt19937_64");
}
