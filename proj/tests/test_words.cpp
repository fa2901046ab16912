#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "wgeo/word.hpp"

using namespace wgeo;

namespace {

// Independent reduction: scan for a cancelling pair, erase, restart.
std::vector<Letter> reduce_by_rescan(std::vector<Letter> v) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == v[i + 1].inverse()) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i), v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return v;
}

std::vector<Letter> random_letters(std::size_t len, int rank, Rng& rng) {
  std::vector<Letter> v;
  for (std::size_t i = 0; i < len; ++i)
    v.push_back(Letter::from_code(static_cast<int>(rng.below(static_cast<std::size_t>(2 * rank)))));
  return v;
}

}  // namespace

TEST_CASE("letter encoding and order") {
  Letter a(0, 1), A(0, -1), b(1, 1), B(1, -1);
  CHECK(a.code() == 0);
  CHECK(A.code() == 1);
  CHECK(b.code() == 2);
  CHECK(B.code() == 3);
  CHECK(a < A);
  CHECK(A < b);
  CHECK(b < B);
  CHECK(a.inverse() == A);
  CHECK(A.inverse() == a);
  CHECK(a.name() == "a");
  CHECK(A.name() == "A");
  CHECK(Letter(26, 1).name() == "x27");
  CHECK(Letter(26, -1).name() == "X27");
}

TEST_CASE("parsing and free reduction") {
  Alphabet f3(3);
  Word w = parse_word("bbaaccabc", f3);
  CHECK(w.size() == 9);
  CHECK(to_string(w) == "bbaaccabc");

  CHECK(parse_word("abBA", f3).empty());
  CHECK(to_string(parse_word("aAa", f3)) == "a");
  CHECK(to_string(parse_word("abAB", f3)) == "abAB");

  Alphabet f2(2);
  try {
    parse_word("azb", f2);
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.position() == 1);
  }
  CHECK_THROWS_AS(parse_word("a b", f2), parse_error);
  CHECK_THROWS_AS(Alphabet(0), domain_error);
}

TEST_CASE("numeric syntax beyond rank 26") {
  Alphabet big(30);
  Word w = parse_word("27 -3 1", big);
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Letter(26, 1));
  CHECK(w[1] == Letter(2, -1));
  CHECK(w[2] == Letter(0, 1));
  CHECK(to_string(w) == "27 -3 1");
  CHECK_THROWS_AS(parse_word("31", big), parse_error);
}

TEST_CASE("free reduction agrees with rescan oracle") {
  Rng rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Letter> v = random_letters(rng.below(20), 3, rng);
    Word reduced = free_reduce(v);
    CHECK(reduced.letters() == reduce_by_rescan(v));
    // Idempotent and never longer.
    CHECK(free_reduce(reduced.letters()).letters() == reduced.letters());
    CHECK(reduced.size() <= v.size());
  }
}

TEST_CASE("cyclic reduction and canonical rotation") {
  Alphabet f3(3);
  CHECK(cyclic_reduce(parse_word("cabAC", f3)).str() == "b");
  CHECK(cyclic_reduce(parse_word("abAB", f3)).str() == "abAB");
  CHECK(cyclic_reduce(parse_word("ABab", f3)).str() == "abAB");
  CHECK(cyclic_reduce(parse_word("bab", f3)).str() == "abb");
  CHECK(cyclic_reduce(parse_word("bbaaccabc", f3)).size() == 9);
  CHECK_THROWS_AS(cyclic_reduce(parse_word("abBA", f3)), domain_error);
  CHECK_THROWS_AS(cyclic_reduce(Word{}), domain_error);
}

TEST_CASE("canonical form is rotation-invariant") {
  Alphabet f2(2);
  Rng rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> v = random_letters(1 + rng.below(8), 2, rng);
    CyclicWord w = [&]() -> CyclicWord {
      try {
        return cyclic_reduce(free_reduce(v));
      } catch (const domain_error&) {
        return cyclic_reduce(parse_word("a", f2));
      }
    }();
    // Every rotation of the canonical form canonicalizes to the same word.
    const auto& letters = w.letters();
    for (std::size_t r = 0; r < letters.size(); ++r) {
      std::vector<Letter> rot(letters.begin() + static_cast<std::ptrdiff_t>(r), letters.end());
      rot.insert(rot.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(r));
      CHECK(cyclic_reduce(free_reduce(rot)) == w);
    }
    // The canonical form is the least rotation.
    for (std::size_t r = 1; r < letters.size(); ++r) {
      std::vector<Letter> rot(letters.begin() + static_cast<std::ptrdiff_t>(r), letters.end());
      rot.insert(rot.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(r));
      CHECK(!(rot < letters));
    }
  }
}

TEST_CASE("collections") {
  Alphabet f3(3);
  auto ws = parse_collection("ab,cabAC,bb", f3);
  REQUIRE(ws.size() == 3);
  CHECK(ws[0].str() == "ab");
  CHECK(ws[1].str() == "b");
  CHECK(ws[2].str() == "bb");
  CHECK(total_length(ws) == 5);

  auto sorted = sorted_collection(ws);
  CHECK(sorted[0].str() == "ab");
  CHECK(sorted[1].str() == "b");
  CHECK(sorted[2].str() == "bb");

  // Positions in errors refer to the whole collection text.
  try {
    parse_collection("ab,a?b", f3);
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_collection("ab,,b", f3), domain_error);

  // The c in "cabAC" cancels away, so only a and b remain in play.
  CHECK(alphabet_spanning(ws).rank == 2);
  CHECK_THROWS_AS(require_within(ws, Alphabet(1)), domain_error);
}
