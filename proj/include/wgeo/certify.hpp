#pragma once

// The certifier and its self-contained certificates.
//
// Pipeline: minimize the collection, then walk the orbit of the minimal
// collection under length-preserving Whitehead moves (breadth-first, capped).
// For each representative, build the Whitehead graph and test the verdict
// criterion: a regular graph of valence k >= 3 that is k-edge-connected and
// non-planar certifies the collection as not virtually geometric.  Failing
// that, any non-planar representative still rules out geometricity for the
// collection itself.  If neither appears before the orbit is exhausted (or
// the cap bites), the result is inconclusive -- the criterion is one-sided,
// so no negative claim is ever made.
//
// A certificate carries everything needed to re-check the claim without
// rerunning the search: the automorphism path from the input to the decisive
// representative, the representative itself, per-generator cut sizes, and a
// Kuratowski witness for non-planarity.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wgeo/automorphism.hpp"
#include "wgeo/cuts.hpp"
#include "wgeo/planarity.hpp"
#include "wgeo/whitehead.hpp"
#include "wgeo/word.hpp"

namespace wgeo {

enum class Verdict { NotVirtuallyGeometric, NotGeometric, Inconclusive };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NotVirtuallyGeometric:
      return "not_virtually_geometric";
    case Verdict::NotGeometric:
      return "not_geometric";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

struct GeneratorCut {
  std::string generator;  // positive letter name
  int size = 0;           // minimum cut between the pair's two vertices
};

struct OrbitStats {
  std::size_t explored = 0;
  std::size_t cap = 0;
  bool truncated = false;
};

struct Certificate {
  int version = 1;
  int alphabet_rank = 1;
  std::vector<std::string> input_words;  // canonical cyclic forms, input order
  Verdict verdict = Verdict::Inconclusive;
  std::optional<int> k;                              // valence, decisive graph
  std::vector<WhiteheadAutomorphism> minimizing_automorphisms;
  std::vector<std::string> minimal_words;            // decisive representative
  std::vector<GeneratorCut> cuts;                    // one per generator (decisive graph)
  std::vector<std::pair<std::string, std::string>> kuratowski_edges;
  OrbitStats orbit;
};

inline constexpr std::size_t kDefaultOrbitCap = 10000;

inline Certificate certify(std::span<const CyclicWord> ws, const Alphabet& alphabet,
                           std::size_t orbit_cap = kDefaultOrbitCap) {
  if (ws.empty()) throw domain_error("cannot certify an empty collection");
  require_within(ws, alphabet);

  Certificate cert;
  cert.alphabet_rank = alphabet.rank;
  for (const CyclicWord& w : ws) cert.input_words.push_back(w.str());

  ReduceResult reduced = whitehead_reduce(ws, alphabet);
  std::vector<WhiteheadAutomorphism> moves = enumerate_whitehead_automorphisms(alphabet);

  // Scan the orbit, remembering the first representative that settles each
  // verdict.  A full verdict stops the scan immediately.
  int trigger = -1;                               // node index, decisive graph
  int first_nonplanar = -1;
  std::optional<KuratowskiWitness> trigger_witness;
  std::optional<KuratowskiWitness> nonplanar_witness;
  std::optional<int> trigger_k;
  int index = 0;

  OrbitResult orbit =
      orbit_scan(reduced.words, alphabet, orbit_cap, [&](const OrbitNode& node) {
        MultiGraph g = build_whitehead_graph(node.words, alphabet);
        PlanarityResult pl = is_planar(g);
        if (!pl.planar && first_nonplanar == -1) {
          first_nonplanar = index;
          nonplanar_witness = pl.kuratowski;
        }
        std::optional<int> k = is_regular(g);
        if (!pl.planar && k && *k >= 3 && is_k_edge_connected(g, *k)) {
          trigger = index;
          trigger_k = k;
          trigger_witness = pl.kuratowski;
          return false;
        }
        ++index;
        return true;
      });

  cert.orbit.explored = orbit.nodes.size();
  cert.orbit.cap = orbit_cap;
  cert.orbit.truncated = orbit.truncated;

  auto label_pair = [](const MultiGraph& g, int e) {
    auto [a, b] = g.endpoints(e);
    return std::make_pair(g.label(a).name(), g.label(b).name());
  };
  auto fill_decisive = [&](int node_index, const KuratowskiWitness& witness) {
    const OrbitNode& node = orbit.nodes[static_cast<std::size_t>(node_index)];
    cert.minimizing_automorphisms = reduced.automorphisms;
    for (int m : orbit_path(orbit, node_index))
      cert.minimizing_automorphisms.push_back(moves[static_cast<std::size_t>(m)]);
    for (const CyclicWord& w : node.words) cert.minimal_words.push_back(w.str());
    MultiGraph g = build_whitehead_graph(node.words, alphabet);
    for (int e : witness.edges) cert.kuratowski_edges.push_back(label_pair(g, e));
    return g;
  };

  if (trigger != -1) {
    cert.verdict = Verdict::NotVirtuallyGeometric;
    cert.k = trigger_k;
    MultiGraph g = fill_decisive(trigger, *trigger_witness);
    for (int gen = 0; gen < alphabet.rank; ++gen) {
      GeneratorCut cut;
      cut.generator = Letter(gen, 1).name();
      cut.size = min_edge_cut(g, 2 * gen, 2 * gen + 1).size;
      cert.cuts.push_back(std::move(cut));
    }
  } else if (first_nonplanar != -1) {
    cert.verdict = Verdict::NotGeometric;
    fill_decisive(first_nonplanar, *nonplanar_witness);
  } else {
    cert.verdict = Verdict::Inconclusive;
    cert.minimizing_automorphisms = reduced.automorphisms;
    for (const CyclicWord& w : orbit.nodes[0].words) cert.minimal_words.push_back(w.str());
  }
  return cert;
}

namespace detail {

// Resolves the certificate's (name, name) pairs back to distinct edge ids.
inline std::optional<std::vector<int>> resolve_edge_names(
    const MultiGraph& g, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<bool> taken(static_cast<std::size_t>(g.edge_count()), false);
  std::vector<int> ids;
  for (const auto& [na, nb] : pairs) {
    int found = -1;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (taken[static_cast<std::size_t>(e)]) continue;
      auto [a, b] = g.endpoints(e);
      const std::string la = g.label(a).name(), lb = g.label(b).name();
      if ((la == na && lb == nb) || (la == nb && lb == na)) {
        found = e;
        break;
      }
    }
    if (found == -1) return std::nullopt;
    taken[static_cast<std::size_t>(found)] = true;
    ids.push_back(found);
  }
  return ids;
}

inline bool kuratowski_edges_check(const MultiGraph& g,
                                   const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto ids = resolve_edge_names(g, pairs);
  if (!ids) return false;
  KuratowskiWitness w;
  w.edges = *ids;
  w.kind = KuratowskiWitness::Kind::K5;
  if (verify_kuratowski(g, w)) return true;
  w.kind = KuratowskiWitness::Kind::K33;
  return verify_kuratowski(g, w);
}

}  // namespace detail

// Re-derives every claim of the certificate from the words alone: the
// automorphism path must replay from the input to the decisive collection,
// the decisive collection must be Whitehead-minimal, and the graph facts
// (valences, cuts, Kuratowski witness) must hold on the rebuilt graph.  On
// failure, `why` (when given) receives the first failed check.
inline bool verify_certificate(const Certificate& cert, std::string* why = nullptr) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (cert.version != 1) return fail("unsupported certificate version");
  if (cert.alphabet_rank < 1) return fail("invalid alphabet rank");

  Alphabet alphabet(cert.alphabet_rank);
  std::vector<CyclicWord> input, minimal;
  try {
    for (const std::string& s : cert.input_words)
      input.push_back(parse_cyclic_word(s, alphabet));
    for (const std::string& s : cert.minimal_words)
      minimal.push_back(parse_cyclic_word(s, alphabet));
  } catch (const std::exception& e) {
    return fail(std::string("certificate words do not parse: ") + e.what());
  }
  if (input.empty() || minimal.empty()) return fail("certificate has no words");

  // Replay the automorphism path.
  std::vector<CyclicWord> replay = input;
  try {
    for (const WhiteheadAutomorphism& phi : cert.minimizing_automorphisms)
      replay = apply_automorphism(phi, std::span<const CyclicWord>(replay));
  } catch (const std::exception& e) {
    return fail(std::string("automorphism replay failed: ") + e.what());
  }
  if (sorted_collection(replay) != sorted_collection(minimal))
    return fail("automorphism path does not replay to the minimal collection");

  // Minimality: no single Whitehead move shortens the decisive collection.
  std::vector<WhiteheadAutomorphism> moves;
  try {
    moves = enumerate_whitehead_automorphisms(alphabet);
  } catch (const std::exception& e) {
    return fail(std::string("cannot re-enumerate automorphisms: ") + e.what());
  }
  std::size_t len = total_length(minimal);
  for (const WhiteheadAutomorphism& phi : moves)
    if (total_length(apply_automorphism(phi, std::span<const CyclicWord>(minimal))) < len)
      return fail("claimed minimal collection admits a shortening move");

  if (cert.verdict == Verdict::Inconclusive) return true;

  MultiGraph g = build_whitehead_graph(minimal, alphabet);
  if (!detail::kuratowski_edges_check(g, cert.kuratowski_edges))
    return fail("Kuratowski witness does not certify non-planarity");

  if (cert.verdict == Verdict::NotGeometric) return true;

  // Full verdict: regular of valence k >= 3, k-edge-connected, with the
  // stated per-generator cuts.
  if (!cert.k || *cert.k < 3) return fail("full verdict requires k >= 3");
  std::optional<int> k = is_regular(g);
  if (!k || *k != *cert.k) return fail("decisive graph is not regular of the stated valence");
  if (!is_k_edge_connected(g, *cert.k))
    return fail("decisive graph is not k-edge-connected");
  if (static_cast<int>(cert.cuts.size()) != cert.alphabet_rank)
    return fail("cut list does not cover the generators");
  std::vector<bool> seen_gen(static_cast<std::size_t>(cert.alphabet_rank), false);
  for (const GeneratorCut& cut : cert.cuts) {
    int gen = -1;
    for (int i = 0; i < cert.alphabet_rank; ++i)
      if (Letter(i, 1).name() == cut.generator) gen = i;
    if (gen == -1) return fail("cut entry names an unknown generator");
    if (seen_gen[static_cast<std::size_t>(gen)]) return fail("duplicate cut entry");
    seen_gen[static_cast<std::size_t>(gen)] = true;
    if (cut.size != *cert.k) return fail("cut size differs from the stated valence");
    if (min_edge_cut(g, 2 * gen, 2 * gen + 1).size != cut.size)
      return fail("recomputed pair cut differs from the certificate");
  }
  return true;
}

inline nlohmann::ordered_json automorphism_to_json(const WhiteheadAutomorphism& phi) {
  nlohmann::ordered_json j;
  switch (phi.kind()) {
    case WhiteheadAutomorphism::Kind::Inversion:
      j["kind"] = "inversion";
      j["generator"] = Letter(phi.generator(), 1).name();
      break;
    case WhiteheadAutomorphism::Kind::Transvection:
      j["kind"] = "transvection";
      j["generator"] = Letter(phi.generator(), 1).name();
      j["factor"] = Letter(phi.factor(), 1).name();
      break;
    case WhiteheadAutomorphism::Kind::Permutation: {
      j["kind"] = "permutation";
      std::vector<std::string> images;
      for (const Letter& l : phi.letters()) images.push_back(l.name());
      j["images"] = images;
      break;
    }
    case WhiteheadAutomorphism::Kind::Multiplier: {
      j["kind"] = "multiplier";
      j["letter"] = phi.multiplier_letter().name();
      std::vector<std::string> side;
      for (const Letter& l : phi.letters()) side.push_back(l.name());
      j["side"] = side;
      break;
    }
  }
  return j;
}

inline nlohmann::ordered_json certificate_to_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["version"] = cert.version;
  j["alphabet_rank"] = cert.alphabet_rank;
  j["input_words"] = cert.input_words;
  j["verdict"] = verdict_name(cert.verdict);
  if (cert.k)
    j["k"] = *cert.k;
  else
    j["k"] = nullptr;
  j["minimizing_automorphisms"] = nlohmann::ordered_json::array();
  for (const WhiteheadAutomorphism& phi : cert.minimizing_automorphisms)
    j["minimizing_automorphisms"].push_back(automorphism_to_json(phi));
  j["minimal_words"] = cert.minimal_words;
  j["cuts"] = nlohmann::ordered_json::array();
  for (const GeneratorCut& cut : cert.cuts) {
    nlohmann::ordered_json c;
    c["generator"] = cut.generator;
    c["size"] = cut.size;
    j["cuts"].push_back(std::move(c));
  }
  j["kuratowski_edges"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : cert.kuratowski_edges)
    j["kuratowski_edges"].push_back(nlohmann::ordered_json::array({a, b}));
  j["orbit"] = {{"explored", cert.orbit.explored},
                {"cap", cert.orbit.cap},
                {"truncated", cert.orbit.truncated}};
  return j;
}

}  // namespace wgeo
