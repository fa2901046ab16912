#pragma once

// Letters, words, and cyclic words over a free group basis x_1, ..., x_n.
// Lowercase letters denote generators, uppercase their inverses (A = a^-1).
// The letter order used everywhere (canonical rotations, vertex order) is
// a < A < b < B < c < C < ...

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wgeo {

// Word text that cannot be parsed; position() is the 0-based offset of the
// offending character (or token start) in the input.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Violations of domain rules: empty cyclic words, rank mismatches, invalid
// parameters, malformed witnesses.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Free group basis of a fixed rank.  Rank is unbounded in the library; only
// the compact a-z text syntax caps out at 26.
struct Alphabet {
  int rank;
  explicit Alphabet(int r) : rank(r) {
    if (r < 1) throw domain_error("alphabet rank must be at least 1");
  }
};

// A single letter x_i^s with s in {+1, -1}.  Encoded as 2*i + (s < 0), so
// integer order on codes is exactly the letter order a < A < b < B < ...
class Letter {
 public:
  Letter(int generator, int sign) {
    if (generator < 0) throw domain_error("letter generator must be >= 0");
    if (sign != 1 && sign != -1) throw domain_error("letter sign must be +1 or -1");
    code_ = 2 * generator + (sign < 0 ? 1 : 0);
  }

  static Letter from_code(int code) {
    if (code < 0) throw domain_error("letter code must be >= 0");
    Letter l;
    l.code_ = code;
    return l;
  }

  int generator() const { return code_ >> 1; }
  int sign() const { return (code_ & 1) ? -1 : 1; }
  bool positive() const { return (code_ & 1) == 0; }
  int code() const { return code_; }
  Letter inverse() const { return from_code(code_ ^ 1); }

  // "a".."z" / "A".."Z" for the first 26 generators, "x27"/"X27" (1-based)
  // beyond that.
  std::string name() const {
    int g = generator();
    if (g < 26) {
      char c = positive() ? static_cast<char>('a' + g) : static_cast<char>('A' + g);
      return std::string(1, c);
    }
    return (positive() ? "x" : "X") + std::to_string(g + 1);
  }

  friend auto operator<=>(const Letter&, const Letter&) = default;

 private:
  Letter() : code_(0) {}
  int code_;
};

// A freely reduced word.  Construction goes through free_reduce / parse_word,
// which guarantee the no-cancellation invariant.
class Word {
 public:
  Word() = default;

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend auto operator<=>(const Word&, const Word&) = default;

  friend Word free_reduce(std::span<const Letter> letters);

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;
};

// Cancels all adjacent inverse pairs (stack pass; one pass suffices because
// every new adjacency is re-examined against the stack top).
inline Word free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

inline std::string to_string(std::span<const Letter> letters) {
  std::string s;
  bool compact = true;
  for (const Letter& l : letters) {
    if (l.generator() >= 26) compact = false;
  }
  if (compact) {
    for (const Letter& l : letters) s += l.name();
    return s;
  }
  // Beyond rank 26 there is no single-character syntax; emit signed 1-based
  // generator indices.
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ' ';
    if (!letters[i].positive()) s += '-';
    s += std::to_string(letters[i].generator() + 1);
  }
  return s;
}

inline std::string to_string(const Word& w) { return to_string(std::span(w.letters())); }

// Parses compact a-z/A-Z text (rank <= 26) or, for larger alphabets,
// whitespace-separated signed 1-based indices.  Rejects letters outside the
// alphabet; the result is freely reduced.
inline Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  if (alphabet.rank <= 26) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      int gen;
      int sign;
      if (c >= 'a' && c <= 'z') {
        gen = c - 'a';
        sign = 1;
      } else if (c >= 'A' && c <= 'Z') {
        gen = c - 'A';
        sign = -1;
      } else {
        throw parse_error(std::string("invalid character '") + c + "' in word", i);
      }
      if (gen >= alphabet.rank) {
        throw parse_error(std::string("letter '") + c + "' outside alphabet of rank " +
                              std::to_string(alphabet.rank),
                          i);
      }
      letters.emplace_back(gen, sign);
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      int sign = 1;
      if (text[i] == '-') {
        sign = -1;
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw parse_error("expected signed generator index", start);
      }
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > alphabet.rank) break;
        ++i;
      }
      if (value < 1 || value > alphabet.rank) {
        throw parse_error("generator index outside alphabet of rank " +
                              std::to_string(alphabet.rank),
                          start);
      }
      letters.emplace_back(static_cast<int>(value - 1), sign);
    }
  }
  return free_reduce(letters);
}

// A nonempty, cyclically reduced conjugacy-class representative stored as the
// lexicographically least rotation.  Construction goes through cyclic_reduce.
class CyclicWord {
 public:
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  // Letter at position i mod length; the cyclic successor view used when
  // reading off two-letter subsequences.
  const Letter& at_cyclic(std::size_t i) const { return letters_[i % letters_.size()]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::string str() const { return to_string(std::span(letters_)); }

  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

  friend CyclicWord cyclic_reduce(const Word& w);

 private:
  explicit CyclicWord(std::vector<Letter> canonical) : letters_(std::move(canonical)) {}
  std::vector<Letter> letters_;
};

// Strips inverse first/last pairs until the word is cyclically reduced, then
// rotates to the lexicographically least rotation.  The empty (trivial)
// conjugacy class is rejected.
inline CyclicWord cyclic_reduce(const Word& w) {
  std::vector<Letter> v = w.letters();
  std::size_t lo = 0, hi = v.size();
  while (hi - lo >= 2 && v[lo] == v[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(v.begin() + static_cast<std::ptrdiff_t>(lo),
                           v.begin() + static_cast<std::ptrdiff_t>(hi));
  if (core.empty()) throw domain_error("empty cyclic word");

  // Least rotation by direct comparison; word lengths here never justify a
  // suffix-automaton approach.
  std::size_t n = core.size();
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < n; ++cand) {
    for (std::size_t k = 0; k < n; ++k) {
      const Letter& a = core[(cand + k) % n];
      const Letter& b = core[(best + k) % n];
      if (a < b) {
        best = cand;
        break;
      }
      if (b < a) break;
    }
  }
  std::vector<Letter> canonical;
  canonical.reserve(n);
  for (std::size_t k = 0; k < n; ++k) canonical.push_back(core[(best + k) % n]);
  return CyclicWord(std::move(canonical));
}

inline CyclicWord parse_cyclic_word(std::string_view text, const Alphabet& alphabet) {
  return cyclic_reduce(parse_word(text, alphabet));
}

// Comma-separated collection; parse error positions refer to the full input
// string.
inline std::vector<CyclicWord> parse_collection(std::string_view text, const Alphabet& alphabet) {
  std::vector<CyclicWord> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view piece = (comma == std::string_view::npos)
                                 ? text.substr(pos)
                                 : text.substr(pos, comma - pos);
    try {
      out.push_back(parse_cyclic_word(piece, alphabet));
    } catch (const parse_error& e) {
      throw parse_error(e.what(), pos + e.position());
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::size_t total_length(std::span<const CyclicWord> ws) {
  std::size_t sum = 0;
  for (const CyclicWord& w : ws) sum += w.size();
  return sum;
}

// Sorted copy; the canonical form of a collection (used for orbit dedup and
// replay comparisons) ignores word order.
inline std::vector<CyclicWord> sorted_collection(std::span<const CyclicWord> ws) {
  std::vector<CyclicWord> out(ws.begin(), ws.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Smallest alphabet containing every letter of the collection.
inline Alphabet alphabet_spanning(std::span<const CyclicWord> ws) {
  int max_gen = 0;
  for (const CyclicWord& w : ws)
    for (const Letter& l : w) max_gen = std::max(max_gen, l.generator());
  return Alphabet(max_gen + 1);
}

// Every letter must fit inside the given alphabet.
inline void require_within(std::span<const CyclicWord> ws, const Alphabet& alphabet) {
  for (const CyclicWord& w : ws)
    for (const Letter& l : w)
      if (l.generator() >= alphabet.rank)
        throw domain_error("word letter " + l.name() + " outside alphabet of rank " +
                           std::to_string(alphabet.rank));
}

}  // namespace wgeo
