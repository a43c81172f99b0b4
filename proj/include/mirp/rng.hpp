#pragma once

#include <cmath>
#include <cstdint>

#include "mirp/constants.hpp"

namespace mirp {

// Counter-based random streams. A stream is identified by a 64-bit id built
// by hashing (seed, indices...). Streams are independent of scheduling:
// evaluating (record, power, trial) in any order gives identical draws.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t stream_id(std::uint64_t seed) { return mix64(seed); }

template <typename... Rest>
constexpr std::uint64_t stream_id(std::uint64_t seed, std::uint64_t first, Rest... rest) {
  return stream_id(mix64(seed ^ (first + 0x632be59bd9b4e019ULL)), rest...);
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t stream) : state_(mix64(stream)) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in (0, 1]; never returns 0 so log() below is safe
  double next_double() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Box-Muller; second value cached
  double next_gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = next_double();
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = constants::two_pi * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  // uniform integer in [0, n)
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

// Deterministic Fisher-Yates shuffle of 0..n-1
template <typename T>
void shuffle_indices(T& indices, CounterRng& rng) {
  for (std::size_t i = indices.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(indices[i - 1], indices[j]);
  }
}

}  // namespace mirp
