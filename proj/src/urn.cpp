#include "polya/urn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "polya/errors.hpp"

namespace polya {

namespace {

std::mt19937_64 chunk_engine(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

void run_chunk(const UrnSpec& spec, std::uint64_t trials, std::mt19937_64& engine,
               std::vector<std::uint64_t>& hist) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double base = spec.a + spec.b;
  for (std::uint64_t t = 0; t < trials; ++t) {
    int whites = 0;
    for (int drawn = 0; drawn < spec.M; ++drawn) {
      const double p_white = (spec.a + spec.c * whites) / (base + spec.c * drawn);
      if (unit(engine) < p_white) ++whites;
    }
    ++hist[static_cast<std::size_t>(whites)];
  }
}

}  // namespace

UrnSpec::UrnSpec(double a_, double b_, double c_, int M_) : a(a_), b(b_), c(c_), M(M_) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("UrnSpec: a must be positive");
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("UrnSpec: b must be positive");
  if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("UrnSpec: c must be >= 0");
  if (M < 1) throw DomainError("UrnSpec: M must be >= 1");
}

PolyaParams urn_to_polya(const UrnSpec& spec) {
  const double total = spec.a + spec.b;
  return PolyaParams(spec.M, spec.c / total, spec.a / total);
}

UrnSpec polya_to_urn(const PolyaParams& params, double total) {
  if (!(params.eta() > 0.0 && params.eta() < 1.0)) {
    throw DomainError("polya_to_urn: eta must lie strictly inside (0, 1)");
  }
  if (!(total > 0.0)) throw DomainError("polya_to_urn: total must be positive");
  return UrnSpec(params.eta() * total, params.eta_bar() * total, params.gamma() * total, params.M());
}

std::vector<std::uint64_t> sample_counts(const UrnSpec& spec, std::uint64_t trials,
                                         std::uint64_t seed, unsigned threads) {
  if (trials < 1) throw DomainError("sample_counts: trials must be >= 1");
  const std::uint64_t chunks = (trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
  const std::size_t bins = static_cast<std::size_t>(spec.M) + 1;
  std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(bins, 0));

  auto work = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t ch = first; ch < chunks; ch += stride) {
      const std::uint64_t begin = ch * kTrialsPerChunk;
      const std::uint64_t count = std::min(kTrialsPerChunk, trials - begin);
      auto engine = chunk_engine(seed, ch);
      run_chunk(spec, count, engine, partial[ch]);
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const auto workers = static_cast<std::uint64_t>(std::min<std::uint64_t>(threads, chunks));
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  std::vector<std::uint64_t> hist(bins, 0);
  for (const auto& h : partial) {
    for (std::size_t n = 0; n < bins; ++n) hist[n] += h[n];
  }
  return hist;
}

std::vector<double> normalize_histogram(const std::vector<std::uint64_t>& counts) {
  const double total = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
  std::vector<double> out(counts.size(), 0.0);
  if (total == 0.0) return out;
  std::transform(counts.begin(), counts.end(), out.begin(),
                 [total](std::uint64_t c) { return static_cast<double>(c) / total; });
  return out;
}

double empirical_tv(const UrnSpec& spec, std::uint64_t trials, std::uint64_t seed) {
  const auto empirical = normalize_histogram(sample_counts(spec, trials, seed));
  const Pmf exact = polya_pmf(urn_to_polya(spec));
  return total_variation(empirical, exact.probs());
}

}  // namespace polya
