#pragma once

#include <cstdint>
#include <vector>

#include "polya/distributions.hpp"

namespace polya {

/// Urn with `a` white and `b` black balls; each drawn ball is returned
/// together with `c` more of its colour. Counts may be real so that every
/// (gamma, eta) has a preimage.
struct UrnSpec {
  UrnSpec(double a, double b, double c, int M);

  double a;
  double b;
  double c;
  int M;
};

/// eta = a/(a+b), gamma = c/(a+b).
PolyaParams urn_to_polya(const UrnSpec& spec);

/// The urn with a + b = total mapping to `params`; needs 0 < eta < 1.
UrnSpec polya_to_urn(const PolyaParams& params, double total = 1.0);

/// Trials are split into fixed chunks of this size, each with its own
/// generator seeded from (seed, chunk index).
inline constexpr std::uint64_t kTrialsPerChunk = 1u << 16;

/// Histogram of the white count n = 0..M over `trials` runs of M draws.
///
/// Deterministic for fixed (spec, trials, seed) within a build, independent of
/// `threads` (0 picks the hardware concurrency).
std::vector<std::uint64_t> sample_counts(const UrnSpec& spec, std::uint64_t trials,
                                         std::uint64_t seed, unsigned threads = 0);

std::vector<double> normalize_histogram(const std::vector<std::uint64_t>& counts);

/// TV distance between the sampled histogram and the exact Polya pmf.
double empirical_tv(const UrnSpec& spec, std::uint64_t trials, std::uint64_t seed);

}  // namespace polya
