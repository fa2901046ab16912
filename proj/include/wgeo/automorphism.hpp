#pragma once

// Whitehead automorphisms of the free group and their action on cyclic words.
//
// Four kinds:
//   Inversion(i)        x_i -> x_i^-1, other generators fixed.
//   Transvection(i, j)  x_i -> x_i x_j, other generators fixed (i != j).
//   Permutation(images) signed permutation of the basis.
//   Multiplier(a, A)    the type II move: a letter a and a side set A with
//                       a in A, a^-1 not in A.  For a generator x != a^(+-1):
//                         x in A, x^-1 not in A   =>  x -> x a
//                         x^-1 in A, x not in A   =>  x -> a^-1 x
//                         both in A               =>  x -> a^-1 x a
//                         neither                 =>  x -> x
//                       and a itself is fixed.
//
// Inversions, transvections and multiplier moves are what the enumeration
// produces; permutations exist for completeness (they never change word
// length, and orbit search does not need them because canonical collection
// forms already quotient by nothing -- they are simply not required for
// length reduction).

#include <cstdint>
#include <string>
#include <vector>

#include "wgeo/word.hpp"

namespace wgeo {

class WhiteheadAutomorphism {
 public:
  enum class Kind { Inversion, Transvection, Permutation, Multiplier };

  static WhiteheadAutomorphism inversion(int generator) {
    if (generator < 0) throw domain_error("inversion: generator must be >= 0");
    WhiteheadAutomorphism phi;
    phi.kind_ = Kind::Inversion;
    phi.generator_ = generator;
    return phi;
  }

  static WhiteheadAutomorphism transvection(int generator, int factor) {
    if (generator < 0 || factor < 0)
      throw domain_error("transvection: generators must be >= 0");
    if (generator == factor)
      throw domain_error("transvection: generator and factor must differ");
    WhiteheadAutomorphism phi;
    phi.kind_ = Kind::Transvection;
    phi.generator_ = generator;
    phi.factor_ = factor;
    return phi;
  }

  // images[i] is the image letter of x_i; must be a signed permutation of the
  // basis (every generator used exactly once).
  static WhiteheadAutomorphism permutation(std::vector<Letter> images) {
    int n = static_cast<int>(images.size());
    if (n < 1) throw domain_error("permutation: empty image list");
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const Letter& l : images) {
      if (l.generator() >= n || used[static_cast<std::size_t>(l.generator())])
        throw domain_error("permutation: images are not a signed permutation");
      used[static_cast<std::size_t>(l.generator())] = true;
    }
    WhiteheadAutomorphism phi;
    phi.kind_ = Kind::Permutation;
    phi.letters_ = std::move(images);
    return phi;
  }

  static WhiteheadAutomorphism multiplier(Letter a, std::vector<Letter> side) {
    bool has_a = false;
    for (const Letter& l : side) {
      if (l == a) has_a = true;
      if (l == a.inverse())
        throw domain_error("multiplier: side set must not contain the multiplier inverse");
    }
    if (!has_a) throw domain_error("multiplier: side set must contain the multiplier");
    std::sort(side.begin(), side.end());
    side.erase(std::unique(side.begin(), side.end()), side.end());
    WhiteheadAutomorphism phi;
    phi.kind_ = Kind::Multiplier;
    phi.multiplier_ = a;
    phi.letters_ = std::move(side);
    return phi;
  }

  Kind kind() const { return kind_; }
  int generator() const { return generator_; }
  int factor() const { return factor_; }
  Letter multiplier_letter() const { return multiplier_; }
  // Permutation images, or the multiplier side set (sorted by letter code).
  const std::vector<Letter>& letters() const { return letters_; }

  bool side_contains(const Letter& l) const {
    return std::binary_search(letters_.begin(), letters_.end(), l);
  }

  // Image of the positive letter x_g as a word of length <= 3.
  std::vector<Letter> image_of_generator(int g) const {
    Letter x(g, 1);
    switch (kind_) {
      case Kind::Inversion:
        return {g == generator_ ? x.inverse() : x};
      case Kind::Transvection:
        if (g == generator_) return {x, Letter(factor_, 1)};
        return {x};
      case Kind::Permutation:
        if (g < static_cast<int>(letters_.size())) return {letters_[static_cast<std::size_t>(g)]};
        return {x};
      case Kind::Multiplier: {
        if (g == multiplier_.generator()) return {x};
        bool pos = side_contains(x);
        bool neg = side_contains(x.inverse());
        if (pos && neg) return {multiplier_.inverse(), x, multiplier_};
        if (pos) return {x, multiplier_};
        if (neg) return {multiplier_.inverse(), x};
        return {x};
      }
    }
    return {x};
  }

  WhiteheadAutomorphism inverse() const {
    switch (kind_) {
      case Kind::Inversion:
        return *this;
      case Kind::Transvection: {
        // (x_i -> x_i x_j)^-1 sends x_i -> x_i x_j^-1, which is the
        // multiplier move with letter x_j^-1 and side {x_j^-1, x_i}.
        Letter a = Letter(factor_, -1);
        return multiplier(a, {a, Letter(generator_, 1)});
      }
      case Kind::Permutation: {
        std::vector<Letter> inv(letters_.size(), Letter(0, 1));
        for (std::size_t i = 0; i < letters_.size(); ++i) {
          const Letter& img = letters_[i];
          inv[static_cast<std::size_t>(img.generator())] =
              Letter(static_cast<int>(i), img.sign());
        }
        return permutation(std::move(inv));
      }
      case Kind::Multiplier: {
        // (a, A)^-1 = (a^-1, (A \ {a}) u {a^-1}).
        std::vector<Letter> side;
        side.reserve(letters_.size());
        for (const Letter& l : letters_)
          if (l != multiplier_) side.push_back(l);
        side.push_back(multiplier_.inverse());
        return multiplier(multiplier_.inverse(), std::move(side));
      }
    }
    throw domain_error("unreachable automorphism kind");
  }

  std::string describe() const {
    switch (kind_) {
      case Kind::Inversion:
        return "inv " + Letter(generator_, 1).name();
      case Kind::Transvection:
        return Letter(generator_, 1).name() + " -> " + Letter(generator_, 1).name() +
               Letter(factor_, 1).name();
      case Kind::Permutation: {
        std::string s = "perm [";
        for (std::size_t i = 0; i < letters_.size(); ++i) {
          if (i) s += ' ';
          s += letters_[i].name();
        }
        return s + "]";
      }
      case Kind::Multiplier: {
        std::string s = "mult " + multiplier_.name() + " side {";
        for (std::size_t i = 0; i < letters_.size(); ++i) {
          if (i) s += ' ';
          s += letters_[i].name();
        }
        return s + "}";
      }
    }
    return "?";
  }

  friend bool operator==(const WhiteheadAutomorphism&, const WhiteheadAutomorphism&) = default;

 private:
  WhiteheadAutomorphism() = default;

  Kind kind_ = Kind::Inversion;
  int generator_ = -1;
  int factor_ = -1;
  Letter multiplier_{0, 1};
  std::vector<Letter> letters_;
};

// Substitutes images letter by letter.  The image of a negative letter is the
// reversed inverse of the generator image.
inline Word apply_automorphism(const WhiteheadAutomorphism& phi, const Word& w) {
  std::vector<Letter> out;
  out.reserve(3 * w.size());
  for (const Letter& l : w) {
    std::vector<Letter> img = phi.image_of_generator(l.generator());
    if (l.positive()) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(it->inverse());
    }
  }
  return free_reduce(out);
}

// Action on a conjugacy class: substitute into any rotation and re-reduce
// cyclically.  A word can never die under an automorphism, so an empty image
// signals corrupted input.
inline CyclicWord apply_automorphism(const WhiteheadAutomorphism& phi, const CyclicWord& w) {
  Word image = apply_automorphism(phi, free_reduce(std::span(w.letters())));
  if (image.empty())
    throw domain_error("automorphism image of a nonempty cyclic word became trivial");
  return cyclic_reduce(image);
}

inline std::vector<CyclicWord> apply_automorphism(const WhiteheadAutomorphism& phi,
                                                  std::span<const CyclicWord> ws) {
  std::vector<CyclicWord> out;
  out.reserve(ws.size());
  for (const CyclicWord& w : ws) out.push_back(apply_automorphism(phi, w));
  return out;
}

// Generators with rank above this make the 2n * 4^(n-1) multiplier family
// impractical to materialize.
inline constexpr int kMaxEnumerationRank = 8;

// The full Whitehead set for minimization, in a fixed deterministic order:
// all inversions (generator ascending), all transvections (lexicographic),
// then every multiplier move: multiplier letter by code ascending, side sets
// by a base-4 mask over the other generators (digit 0 = neither, 1 = positive
// letter in the side, 2 = negative, 3 = both), mask ascending.  Signed
// permutations are deliberately not enumerated: they never change length.
inline std::vector<WhiteheadAutomorphism> enumerate_whitehead_automorphisms(
    const Alphabet& alphabet) {
  int n = alphabet.rank;
  if (n > kMaxEnumerationRank)
    throw domain_error("automorphism enumeration capped at rank " +
                       std::to_string(kMaxEnumerationRank) +
                       " (multiplier family grows as 2n*4^(n-1))");
  std::vector<WhiteheadAutomorphism> out;
  for (int i = 0; i < n; ++i) out.push_back(WhiteheadAutomorphism::inversion(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.push_back(WhiteheadAutomorphism::transvection(i, j));

  std::uint64_t masks = 1;
  for (int k = 0; k < n - 1; ++k) masks *= 4;
  for (int code = 0; code < 2 * n; ++code) {
    Letter a = Letter::from_code(code);
    std::vector<int> others;
    for (int g = 0; g < n; ++g)
      if (g != a.generator()) others.push_back(g);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      std::vector<Letter> side = {a};
      std::uint64_t m = mask;
      for (int g : others) {
        switch (m & 3) {
          case 1:
            side.emplace_back(g, 1);
            break;
          case 2:
            side.emplace_back(g, -1);
            break;
          case 3:
            side.emplace_back(g, 1);
            side.emplace_back(g, -1);
            break;
          default:
            break;
        }
        m >>= 2;
      }
      out.push_back(WhiteheadAutomorphism::multiplier(a, std::move(side)));
    }
  }
  return out;
}

}  // namespace wgeo
