#pragma once

#include <cstdint>

#include "gwa/algebra.hpp"

namespace gwa {

/// Deterministic 64-bit generator (splitmix64). Used instead of the standard
/// distributions so that seeded runs are reproducible independent of the
/// platform and of how cases are scheduled.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// Per-case seed derived from (seed, case index); every verification case
/// gets its own stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Random algebra inputs of bounded size for the verification suites.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t bits() { return rng_.next(); }
  long range(long lo, long hi);  // inclusive
  bool chance(unsigned percent);

  /// Nonzero rational of bounded height.
  Scalar nonzero_rational(long height, FieldMode m);
  /// Coefficient scalar: a rational times a small power of q in generic mode.
  Scalar coefficient(FieldMode m, long height, int q_span = 2);
  Poly poly(FieldMode m, int max_deg, long height);
  Poly nonzero_poly(FieldMode m, int max_deg, long height);
  Element element(FieldMode m, int max_abs_deg, int max_poly_deg, long height);
  Element nonzero_element(FieldMode m, int max_abs_deg, int max_poly_deg,
                          long height);

 private:
  SplitMix64 rng_;
};

}  // namespace gwa
