#pragma once

// Seeded randomness for simulations.  std::mt19937_64 supplies the stream;
// bounded draws and shuffles are implemented here (not via std::uniform_int
// or std::shuffle, whose outputs vary across standard libraries) so equal
// seeds give byte-identical artifacts everywhere.

#include <cstdint>
#include <random>
#include <vector>

namespace wgeo {

inline constexpr const char* kRngAlgorithm = "mt19937_64";

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform draw from [0, n) by rejection, so no modulo bias.
  std::size_t below(std::size_t n) {
    if (n == 0) return 0;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return static_cast<std::size_t>(v % n);
  }

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // Identity-seeded random permutation of 0..n-1.
  std::vector<int> permutation(std::size_t n) {
    std::vector<int> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    shuffle(p);
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace wgeo
