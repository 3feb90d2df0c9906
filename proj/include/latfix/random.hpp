#pragma once

#include <cstdint>
#include <random>

#include "latfix/matrix.hpp"

namespace latfix {

using Rng = std::mt19937_64;

/// Per-trial seed derived from a run seed (splitmix64 finalizer), so trial i
/// sees the same stream regardless of which worker runs it.
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline long uniform_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// p/q with p uniform in [lo, hi] and q uniform in [1, max_den].
inline Rational random_rational(Rng& rng, long lo, long hi, long max_den) {
  Rational r(uniform_int(rng, lo, hi), uniform_int(rng, 1, max_den));
  r.canonicalize();
  return r;
}

inline QVector random_vector(Rng& rng, std::size_t n, long lo, long hi, long max_den) {
  QVector v(n);
  for (auto& x : v) x = random_rational(rng, lo, hi, max_den);
  return v;
}

}  // namespace latfix
