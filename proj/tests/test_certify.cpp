#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "oracles.hpp"
#include "wgeo/certify.hpp"
#include "wgeo/isomorphism.hpp"

using namespace wgeo;

namespace {

Certificate certify_text(const std::string& text, int rank,
                         std::size_t cap = kDefaultOrbitCap) {
  Alphabet alphabet(rank);
  auto ws = parse_collection(text, alphabet);
  return certify(ws, alphabet, cap);
}

}  // namespace

TEST_CASE("the K33-shaped word is certified not virtually geometric") {
  Certificate cert = certify_text("bbaaccabc", 3);
  CHECK(cert.verdict == Verdict::NotVirtuallyGeometric);
  REQUIRE(cert.k.has_value());
  CHECK(*cert.k == 3);
  CHECK(cert.input_words == std::vector<std::string>{"aaccabcbb"});
  CHECK(cert.minimal_words == std::vector<std::string>{"aaccabcbb"});
  CHECK(cert.minimizing_automorphisms.empty());
  REQUIRE(cert.cuts.size() == 3);
  for (const GeneratorCut& cut : cert.cuts) CHECK(cut.size == 3);
  CHECK(cert.cuts[0].generator == "a");
  CHECK(cert.cuts[1].generator == "b");
  CHECK(cert.cuts[2].generator == "c");
  CHECK(cert.kuratowski_edges.size() == 9);

  std::string why;
  CHECK(verify_certificate(cert, &why));
  CHECK(why.empty());

  // The decisive graph really is the bipartite one.
  Alphabet f3(3);
  auto minimal = parse_collection("bbaaccabc", f3);
  CHECK(is_isomorphic(build_whitehead_graph(minimal, f3),
                      oracle::complete_bipartite(3, 3)));
}

TEST_CASE("the valence-four word is certified not virtually geometric") {
  Certificate cert = certify_text("baabccACBBCA", 3);
  CHECK(cert.verdict == Verdict::NotVirtuallyGeometric);
  REQUIRE(cert.k.has_value());
  CHECK(*cert.k == 4);
  for (const GeneratorCut& cut : cert.cuts) CHECK(cut.size == 4);
  CHECK(verify_certificate(cert));
}

TEST_CASE("a circle word is inconclusive") {
  Certificate cert = certify_text("abAB", 2);
  CHECK(cert.verdict == Verdict::Inconclusive);
  CHECK(!cert.k.has_value());
  CHECK(cert.cuts.empty());
  CHECK(cert.kuratowski_edges.empty());
  CHECK(verify_certificate(cert));
}

TEST_CASE("reduction happens before the verdict") {
  Certificate cert = certify_text("aba", 2);
  CHECK(cert.verdict == Verdict::Inconclusive);
  CHECK(cert.minimizing_automorphisms.size() >= 1);
  CHECK(total_length(parse_collection(cert.minimal_words[0], Alphabet(2))) == 1);
  CHECK(verify_certificate(cert));
}

TEST_CASE("a mixed collection earns only the one-sided verdict") {
  // Adding an isolated doubled pair on a fourth generator spoils regularity
  // at every representative (11 edges never split into a regular valence),
  // but the non-planar piece still rules out geometricity.
  Alphabet f4(4);
  auto ws = parse_collection("bbaaccabc,dd", f4);
  Certificate cert = certify(ws, f4, 400);
  CHECK(cert.verdict == Verdict::NotGeometric);
  CHECK(!cert.k.has_value());
  CHECK(cert.cuts.empty());
  CHECK(cert.kuratowski_edges.size() == 9);
  std::string why;
  bool ok = verify_certificate(cert, &why);
  INFO(why);
  CHECK(ok);
}

TEST_CASE("verdicts are stable under the orbit cap") {
  Certificate tight = certify_text("bbaaccabc", 3, 1);
  CHECK(tight.verdict == Verdict::NotVirtuallyGeometric);
  CHECK(tight.orbit.explored == 1);
  CHECK(verify_certificate(tight));

  Certificate small_cap = certify_text("abAB", 2, 1);
  CHECK(small_cap.verdict == Verdict::Inconclusive);
  CHECK(small_cap.orbit.truncated);
  CHECK(small_cap.orbit.cap == 1);
  CHECK(verify_certificate(small_cap));

  Certificate full = certify_text("abAB", 2);
  CHECK(full.verdict == Verdict::Inconclusive);
  CHECK(!full.orbit.truncated);
  CHECK(full.orbit.explored >= 2);
}

TEST_CASE("certify input validation") {
  Alphabet f2(2);
  CHECK_THROWS_AS(certify({}, f2), domain_error);
  auto ws = parse_collection("abc", Alphabet(3));
  CHECK_THROWS_AS(certify(ws, f2), domain_error);
}

TEST_CASE("tampered certificates fail verification") {
  Certificate good = certify_text("bbaaccabc", 3);
  REQUIRE(verify_certificate(good));
  std::string why;

  Certificate bad = good;
  bad.cuts[0].size = 2;
  CHECK(!verify_certificate(bad, &why));
  CHECK(why.find("cut") != std::string::npos);

  bad = good;
  bad.k = 4;
  CHECK(!verify_certificate(bad));

  bad = good;
  bad.kuratowski_edges.pop_back();
  CHECK(!verify_certificate(bad, &why));
  CHECK(why.find("Kuratowski") != std::string::npos);

  bad = good;
  bad.minimal_words = {"abcabc"};
  CHECK(!verify_certificate(bad));

  bad = good;
  bad.version = 2;
  CHECK(!verify_certificate(bad));

  bad = good;
  bad.cuts.pop_back();
  CHECK(!verify_certificate(bad));

  // Upgrading an inconclusive verdict by hand does not pass.
  Certificate upgraded = certify_text("abAB", 2);
  upgraded.verdict = Verdict::NotVirtuallyGeometric;
  upgraded.k = 3;
  CHECK(!verify_certificate(upgraded));

  // Dropping the recorded reduction breaks the replay.
  Certificate reduced = certify_text("aba", 2);
  REQUIRE(verify_certificate(reduced));
  reduced.minimizing_automorphisms.clear();
  CHECK(!verify_certificate(reduced, &why));
  CHECK(why.find("replay") != std::string::npos);
}

TEST_CASE("certificate JSON layout") {
  Certificate cert = certify_text("bbaaccabc", 3);
  nlohmann::ordered_json j = certificate_to_json(cert);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"version", "alphabet_rank", "input_words",
                                         "verdict", "k", "minimizing_automorphisms",
                                         "minimal_words", "cuts", "kuratowski_edges",
                                         "orbit"});
  CHECK(j["verdict"] == "not_virtually_geometric");
  CHECK(j["k"] == 3);
  CHECK(j["cuts"].size() == 3);
  CHECK(j["cuts"][0]["generator"] == "a");
  CHECK(j["cuts"][0]["size"] == 3);
  CHECK(j["kuratowski_edges"].size() == 9);
  CHECK(j["kuratowski_edges"][0].size() == 2);
  CHECK(j["orbit"]["explored"] == 1);
  CHECK(j["orbit"]["truncated"] == false);

  nlohmann::ordered_json inc = certificate_to_json(certify_text("abAB", 2));
  CHECK(inc["verdict"] == "inconclusive");
  CHECK(inc["k"].is_null());
}

TEST_CASE("automorphism JSON") {
  Alphabet f2(2);
  auto j1 = automorphism_to_json(WhiteheadAutomorphism::inversion(0));
  CHECK(j1["kind"] == "inversion");
  CHECK(j1["generator"] == "a");

  auto j2 = automorphism_to_json(WhiteheadAutomorphism::transvection(0, 1));
  CHECK(j2["kind"] == "transvection");
  CHECK(j2["generator"] == "a");
  CHECK(j2["factor"] == "b");

  auto j3 = automorphism_to_json(
      WhiteheadAutomorphism::multiplier(Letter(0, 1), {Letter(0, 1), Letter(1, -1)}));
  CHECK(j3["kind"] == "multiplier");
  CHECK(j3["letter"] == "a");
  CHECK(j3["side"] == std::vector<std::string>{"a", "B"});

  auto j4 = automorphism_to_json(
      WhiteheadAutomorphism::permutation({Letter(1, 1), Letter(0, 1)}));
  CHECK(j4["kind"] == "permutation");
  CHECK(j4["images"] == std::vector<std::string>{"b", "a"});
}

TEST_CASE("small rank-two inputs are always inconclusive and verifiable") {
  // Whitehead graphs on four vertices are too small to be non-planar, so the
  // verdict can never fire in rank 2; every certificate must still verify.
  Alphabet f2(2);
  auto words = oracle::all_rank2_cyclic_words(4);
  for (const auto& w : words) {
    std::vector<CyclicWord> ws = {w};
    Certificate cert = certify(ws, f2, 300);
    CHECK(cert.verdict == Verdict::Inconclusive);
    std::string why;
    bool ok = verify_certificate(cert, &why);
    INFO(w.str() << ": " << why);
    CHECK(ok);
  }
}
