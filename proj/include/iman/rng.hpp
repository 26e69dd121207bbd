#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace iman {

// Seedable generator with deterministic substreams. All draws go through
// hand-rolled helpers rather than <random> distributions so that the same
// seed produces the same bytes on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(mix(seed) ^ kStreamSalt)) {}

  // Independent substream: (seed, stream) pairs map to decorrelated states.
  Rng(std::uint64_t seed, std::uint64_t stream)
      : engine_(mix(mix(seed) ^ mix(stream + kStreamSalt))) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; never exactly zero.
  double uniform_positive() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound) via rejection sampling.
  int uniform_int(int bound) {
    if (bound <= 0) throw std::invalid_argument("uniform_int bound must be positive");
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = (UINT64_MAX / b) * b;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return static_cast<int>(x % b);
  }

  // Index draw from a probability vector by CDF inversion.
  int categorical(const std::vector<double>& probs) {
    const double u = uniform();
    double cum = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      cum += probs[i];
      if (u < cum) return static_cast<int>(i);
    }
    return static_cast<int>(probs.size()) - 1;  // fp residue at the top end
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_int(static_cast<int>(i)));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static constexpr std::uint64_t kStreamSalt = 0x6a09e667f3bcc909ULL;

  // splitmix64 finalizer, used only to spread seed entropy.
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace iman
