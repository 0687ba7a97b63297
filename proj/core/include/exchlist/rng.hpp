#ifndef EXCHLIST_RNG_HPP
#define EXCHLIST_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace exchlist {

// All randomness in the library flows through Rng so that results are
// reproducible bit for bit across platforms and across worker counts.
// Standard-library distributions are avoided on purpose: their output is
// implementation defined, mt19937_64 itself is not.

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Derives an independent sub-stream seed for (stream, round) under a master
/// seed. Used to give every resampling round / permutation / repeat its own
/// generator so parallel schedules cannot change results.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream,
                              std::uint64_t round = 0) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ round);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// Uniform real in [0, 1).
  double uniform_real() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller. Not cached; two draws per call.
  double normal() {
    double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    double u2 = uniform_real();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_index(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace exchlist

#endif
