// wgeo command line: build Whitehead graphs, minimize word collections,
// certify non-(virtual-)geometricity, and run splice simulations.
//
// Exit codes: 0 success (certify: full verdict), 2 input error, and for
// certify 3 = not geometric, 4 = inconclusive; splice-sim exits 1 when a
// trial violates an expected invariant.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wgeo/wgeo.hpp"

namespace {

using nlohmann::ordered_json;

struct Input {
  std::vector<wgeo::CyclicWord> words;
  wgeo::Alphabet alphabet{1};
};

// CLI text is capped at rank 26 (one letter per generator); the library
// itself has no such limit.
Input parse_input(const std::string& text, std::optional<int> rank) {
  int inferred = 1;
  for (char c : text) {
    if (c >= 'a' && c <= 'z') inferred = std::max(inferred, c - 'a' + 1);
    if (c >= 'A' && c <= 'Z') inferred = std::max(inferred, c - 'A' + 1);
  }
  Input in;
  int r = rank.value_or(inferred);
  if (r < 1 || r > 26) throw wgeo::domain_error("rank must be between 1 and 26");
  if (r < inferred)
    throw wgeo::domain_error("rank " + std::to_string(r) +
                             " is smaller than the words require (" +
                             std::to_string(inferred) + ")");
  in.alphabet = wgeo::Alphabet(r);
  in.words = wgeo::parse_collection(text, in.alphabet);
  return in;
}

ordered_json graph_stats(const wgeo::MultiGraph& g) {
  ordered_json valences;
  for (int v = 0; v < g.vertex_count(); ++v) valences[g.label(v).name()] = g.valence(v);
  std::optional<int> k = wgeo::is_regular(g);
  ordered_json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["valences"] = valences;
  if (k)
    j["regular"] = *k;
  else
    j["regular"] = nullptr;
  j["edge_connectivity"] = g.vertex_count() >= 2 ? wgeo::edge_connectivity(g).value : 0;
  j["planar"] = wgeo::is_planar(g).planar;
  return j;
}

ordered_json graph_json(const wgeo::MultiGraph& g) {
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (int v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.label(v).name());
  j["edges"] = ordered_json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    j["edges"].push_back(ordered_json::array({g.label(a).name(), g.label(b).name()}));
  }
  j["stats"] = graph_stats(g);
  return j;
}

std::size_t orbit_cap_from(const std::optional<std::size_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("WGEO_ORBIT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw wgeo::domain_error("WGEO_ORBIT_CAP must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return wgeo::kDefaultOrbitCap;
}

int run_graph(const std::string& text, std::optional<int> rank, bool stats, bool json) {
  Input in = parse_input(text, rank);
  wgeo::MultiGraph g = wgeo::build_whitehead_graph(in.words, in.alphabet);
  if (json)
    std::cout << graph_json(g).dump(2) << "\n";
  else if (stats)
    std::cout << graph_stats(g).dump(2) << "\n";
  else
    std::cout << wgeo::to_dot(g);
  return 0;
}

int run_minimize(const std::string& text, std::optional<int> rank) {
  Input in = parse_input(text, rank);
  std::size_t initial = wgeo::total_length(in.words);
  wgeo::ReduceResult r = wgeo::whitehead_reduce(in.words, in.alphabet);
  ordered_json j;
  j["input_words"] = ordered_json::array();
  for (const auto& w : in.words) j["input_words"].push_back(w.str());
  j["minimal_words"] = ordered_json::array();
  for (const auto& w : r.words) j["minimal_words"].push_back(w.str());
  j["automorphisms"] = ordered_json::array();
  for (const auto& phi : r.automorphisms)
    j["automorphisms"].push_back(wgeo::automorphism_to_json(phi));
  j["initial_length"] = initial;
  j["final_length"] = wgeo::total_length(r.words);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_certify(const std::string& text, std::optional<int> rank,
                std::optional<std::size_t> cap_flag, bool json) {
  Input in = parse_input(text, rank);
  std::size_t cap = orbit_cap_from(cap_flag);
  wgeo::Certificate cert = wgeo::certify(in.words, in.alphabet, cap);

  std::string human = "verdict: " + wgeo::verdict_name(cert.verdict);
  if (cert.k) human += " (k = " + std::to_string(*cert.k) + ")";
  if (json) {
    std::cout << wgeo::certificate_to_json(cert).dump(2) << "\n";
    std::cerr << human << "\n";
  } else {
    std::cout << human << "\n";
    std::cout << "minimal words:";
    for (const auto& w : cert.minimal_words) std::cout << " " << w;
    std::cout << "\n";
    std::cout << "orbit: explored=" << cert.orbit.explored << " cap=" << cert.orbit.cap
              << " truncated=" << (cert.orbit.truncated ? "true" : "false") << "\n";
  }
  switch (cert.verdict) {
    case wgeo::Verdict::NotVirtuallyGeometric:
      return 0;
    case wgeo::Verdict::NotGeometric:
      return 3;
    case wgeo::Verdict::Inconclusive:
      return 4;
  }
  return 4;
}

// One splice-simulation trial record.
ordered_json trial_record(const wgeo::MultiGraph& spliced, int expected_k,
                          std::optional<bool> minor_found) {
  ordered_json t;
  std::optional<int> k = wgeo::is_regular(spliced);
  if (k)
    t["valence"] = *k;
  else
    t["valence"] = nullptr;
  t["edge_connectivity"] =
      spliced.vertex_count() >= 2 ? wgeo::edge_connectivity(spliced).value : 0;
  t["planar"] = wgeo::is_planar(spliced).planar;
  if (minor_found)
    t["minor_found"] = *minor_found;
  else
    t["minor_found"] = nullptr;
  bool ok = k && *k == expected_k && t["edge_connectivity"].get<int>() >= expected_k &&
            (!minor_found || *minor_found);
  t["ok"] = ok;
  return t;
}

int run_splice_sim(const std::string& word_text, const std::string& regular_text,
                   std::optional<int> rank, int copies, int trials, std::uint64_t seed,
                   bool unmatched) {
  if (trials < 1) throw wgeo::domain_error("need at least one trial");
  ordered_json report;
  report["seed"] = seed;
  report["trials"] = trials;
  int violations = 0;

  if (!word_text.empty()) {
    Input in = parse_input(word_text, rank);
    wgeo::MultiGraph base = wgeo::build_whitehead_graph(in.words, in.alphabet);
    std::optional<int> k = wgeo::is_regular(base);
    if (!k || *k < 1)
      throw wgeo::domain_error("splice-sim needs a regular base graph with k >= 1");
    if (!wgeo::is_k_edge_connected(base, *k))
      throw wgeo::domain_error("splice-sim needs a k-edge-connected base graph");
    if (copies < 1) throw wgeo::domain_error("--copies must be >= 1");
    report["d"] = copies;
    report["base"] = graph_stats(base);
    report["per_trial"] = ordered_json::array();
    bool minor_feasible =
        base.vertex_count() * copies - 2 * (copies - 1) <= wgeo::kMaxMinorHostVertices &&
        base.vertex_count() <= wgeo::kMaxMinorPatternVertices;
    for (int t = 0; t < trials; ++t) {
      wgeo::CoverTrace cover =
          wgeo::simulate_cover(base, copies, seed + static_cast<std::uint64_t>(t), !unmatched);
      std::optional<bool> minor;
      if (minor_feasible)
        minor = wgeo::contains_minor(cover.graph, base).has_value();
      ordered_json rec = trial_record(cover.graph, *k, minor);
      if (!rec["ok"].get<bool>()) ++violations;
      report["per_trial"].push_back(std::move(rec));
    }
  } else {
    int n = 0, kk = 0;
    if (std::sscanf(regular_text.c_str(), "%d,%d", &n, &kk) != 2)
      throw wgeo::domain_error("--regular expects n,k");
    report["d"] = 2;
    report["params"] = {{"n", n}, {"k", kk}};
    report["per_trial"] = ordered_json::array();
    wgeo::Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
      wgeo::MultiGraph g1 = wgeo::random_regular_connected_graph(n, kk, rng.next());
      wgeo::MultiGraph g2 = wgeo::random_regular_connected_graph(n, kk, rng.next());
      wgeo::SpliceInstruction instr;
      instr.first_vertex = static_cast<int>(rng.below(static_cast<std::size_t>(n)));
      instr.second_vertex = static_cast<int>(rng.below(static_cast<std::size_t>(n)));
      instr.sigma = rng.permutation(static_cast<std::size_t>(kk));
      wgeo::MultiGraph spliced = wgeo::splice(g1, g2, instr);
      // The minor guarantee needs the second graph to stay connected after
      // losing its splice vertex.
      std::optional<bool> minor;
      if (wgeo::is_connected(wgeo::delete_vertex(g2, instr.second_vertex)) &&
          spliced.vertex_count() <= wgeo::kMaxMinorHostVertices &&
          g1.vertex_count() <= wgeo::kMaxMinorPatternVertices)
        minor = wgeo::contains_minor(spliced, g1).has_value();
      ordered_json rec = trial_record(spliced, kk, minor);
      if (!rec["ok"].get<bool>()) ++violations;
      report["per_trial"].push_back(std::move(rec));
    }
  }
  report["violations"] = violations;
  std::cout << report.dump(2) << "\n";
  return violations == 0 ? 0 : 1;
}

int run_selftest() {
  int failures = 0;
  auto check = [&](bool ok, const std::string& name) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };
  try {
    wgeo::Alphabet f3(3);
    auto words = wgeo::parse_collection("bbaaccabc", f3);
    check(wgeo::total_length(words) == 9, "parse length");
    wgeo::MultiGraph g = wgeo::build_whitehead_graph(words, f3);
    check(g.vertex_count() == 6 && g.edge_count() == 9, "graph shape");
    check(wgeo::is_regular(g) == std::optional<int>(3), "regular");
    check(wgeo::edge_connectivity(g).value == 3, "edge connectivity");
    check(!wgeo::is_planar(g).planar, "non-planar");
    wgeo::Certificate cert = wgeo::certify(words, f3);
    check(cert.verdict == wgeo::Verdict::NotVirtuallyGeometric, "certify verdict");
    check(wgeo::verify_certificate(cert), "certificate verifies");
    auto cover = wgeo::simulate_cover(g, 3, 7);
    auto cover2 = wgeo::simulate_cover(g, 3, 7);
    check(wgeo::to_dot(cover.graph) == wgeo::to_dot(cover2.graph), "cover determinism");
    check(wgeo::edge_connectivity(cover.graph).value == 3, "cover connectivity");
  } catch (const std::exception& e) {
    std::cout << "FAIL exception: " << e.what() << "\n";
    ++failures;
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Whitehead graph toolkit"};
  app.require_subcommand(1);

  std::string words_arg;
  std::optional<int> rank;
  bool flag_stats = false, flag_dot = false, flag_json = false;

  CLI::App* graph = app.add_subcommand("graph", "Build the Whitehead graph of a collection");
  graph->add_option("words", words_arg, "comma-separated words")->required();
  graph->add_option("--rank", rank, "alphabet rank (default: inferred)");
  graph->add_flag("--stats", flag_stats, "print stats JSON");
  graph->add_flag("--dot", flag_dot, "print DOT (default)");
  graph->add_flag("--json", flag_json, "print graph JSON");

  CLI::App* minimize = app.add_subcommand("minimize", "Minimize a collection");
  minimize->add_option("words", words_arg, "comma-separated words")->required();
  minimize->add_option("--rank", rank, "alphabet rank (default: inferred)");

  std::optional<std::size_t> cap_flag;
  CLI::App* certify = app.add_subcommand("certify", "Certify a collection");
  certify->add_option("words", words_arg, "comma-separated words")->required();
  certify->add_option("--rank", rank, "alphabet rank (default: inferred)");
  certify->add_option("--orbit-cap", cap_flag, "orbit size cap (or WGEO_ORBIT_CAP)");
  certify->add_flag("--json", flag_json, "print the certificate JSON");

  std::string word_text, regular_text;
  int copies = 2, trials = 1;
  std::uint64_t seed = 0;
  bool unmatched = false;
  CLI::App* sim = app.add_subcommand("splice-sim", "Cover and splice simulations");
  auto* w = sim->add_option("--word", word_text, "base collection (cover mode)");
  auto* r = sim->add_option("--regular", regular_text, "n,k (random regular mode)");
  sim->add_option("--rank", rank, "alphabet rank for --word");
  sim->add_option("--copies", copies, "cover sheets (cover mode)");
  sim->add_option("--trials", trials, "number of trials");
  sim->add_option("--seed", seed, "random seed");
  sim->add_flag("--unmatched", unmatched, "allow label-mismatched splice sites");
  w->excludes(r);

  CLI::App* selftest = app.add_subcommand("selftest", "Run built-in checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (graph->parsed()) return run_graph(words_arg, rank, flag_stats, flag_json);
    if (minimize->parsed()) return run_minimize(words_arg, rank);
    if (certify->parsed()) return run_certify(words_arg, rank, cap_flag, flag_json);
    if (sim->parsed()) {
      if (word_text.empty() && regular_text.empty())
        throw wgeo::domain_error("splice-sim needs --word or --regular");
      return run_splice_sim(word_text, regular_text, rank, copies, trials, seed, unmatched);
    }
    if (selftest->parsed()) return run_selftest();
  } catch (const wgeo::parse_error& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
