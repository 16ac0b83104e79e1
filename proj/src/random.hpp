// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PEERSEL_SRC_RANDOM_HPP
#define PEERSEL_SRC_RANDOM_HPP

#include <cstdint>
#include <random>

#include "peersel/core_model.hpp"

namespace peersel::detail {

// Standard distributions are implementation-defined, so every draw goes
// through these helpers to keep seeded output identical across toolchains.

/// Uniform in [0, bound), bound ≥ 1, by rejection.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// u ~ U[0, 2^64) succeeds iff u < ceil(p · 2^64), i.e. with probability
/// exactly p for p ∈ [0, 1] whose denominator is a power of two, and within
/// 2^-64 otherwise.
class ExactThreshold {
 public:
  explicit ExactThreshold(const Rational& p);
  bool accepts(std::uint64_t u) const { return static_cast<unsigned __int128>(u) < threshold_; }

 private:
  unsigned __int128 threshold_ = 0;
};

inline ExactThreshold::ExactThreshold(const Rational& p) {
  namespace mp = boost::multiprecision;
  if (p <= 0) return;
  if (p >= 1) {
    threshold_ = static_cast<unsigned __int128>(1) << 64;
    return;
  }
  const mp::mpz_int den = mp::denominator(p);
  const mp::mpz_int scaled = mp::mpz_int(mp::numerator(p)) << 64;
  threshold_ = mp::mpz_int((scaled + den - 1) / den).convert_to<std::uint64_t>();
}

}  // namespace peersel::detail

#endif  // PEERSEL_SRC_RANDOM_HPP
