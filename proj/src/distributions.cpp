#include "polya/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "polya/errors.hpp"

namespace polya {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// sum_{k<count} log(base + k gamma), with -inf as soon as a factor is zero.
// Prefix values are written to `prefix` (size count + 1) when given.
double log_rising_sum(double base, double gamma, int count, std::vector<double>* prefix) {
  double acc = 0.0;
  if (prefix) {
    prefix->assign(static_cast<std::size_t>(count) + 1, 0.0);
  }
  for (int k = 0; k < count; ++k) {
    const double factor = base + k * gamma;
    if (acc != kNegInf) {
      if (factor == 0.0) {
        acc = kNegInf;
      } else if (gamma == 0.0) {
        // Identical factors; the product is base^(k+1).
        acc = (k + 1) * std::log(base);
      } else {
        acc += std::log(factor);
      }
    }
    if (prefix) (*prefix)[static_cast<std::size_t>(k) + 1] = acc;
  }
  return acc;
}

// sum_{1<=k<M} log(1 + k gamma)
double log_normalizer(int M, double gamma) {
  double acc = 0.0;
  if (gamma == 0.0) return acc;
  for (int k = 1; k < M; ++k) acc += std::log1p(k * gamma);
  return acc;
}

void check_index(int n, int M, const char* op) {
  if (n < 0 || n > M) {
    throw DomainError(std::string(op) + ": n=" + std::to_string(n) + " outside 0.." +
                      std::to_string(M));
  }
}

}  // namespace

PolyaParams::PolyaParams(int M, double gamma, double eta) : M_(M), gamma_(gamma), eta_(eta) {
  if (M < 0) throw DomainError("PolyaParams: M must be non-negative, got " + std::to_string(M));
  if (!std::isfinite(gamma) || gamma < 0.0) {
    throw DomainError("PolyaParams: gamma must be finite and >= 0");
  }
  if (!std::isfinite(eta) || eta < 0.0 || eta > 1.0) {
    throw DomainError("PolyaParams: eta must lie in [0, 1]");
  }
}

Pmf::Pmf(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw DomainError("Pmf: empty support");
}

double Pmf::sum() const noexcept { return std::accumulate(probs_.begin(), probs_.end(), 0.0); }

NegBinParams::NegBinParams(double r_, double p_) : r(r_), p(p_) {
  if (!std::isfinite(r) || r <= 0.0) throw DomainError("NegBinParams: r must be > 0");
  if (!std::isfinite(p) || p <= 0.0 || p >= 1.0) {
    throw DomainError("NegBinParams: p must lie in (0, 1)");
  }
}

double log_gamma(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double log_binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) throw DomainError("log_binomial_coefficient: k outside 0..n");
  if (k == 0 || k == n) return 0.0;
  return log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0);
}

double polya_log_pmf(const PolyaParams& params, int n) {
  const int M = params.M();
  check_index(n, M, "polya_log_pmf");
  const double white = log_rising_sum(params.eta(), params.gamma(), n, nullptr);
  if (white == kNegInf) return kNegInf;
  const double black = log_rising_sum(params.eta_bar(), params.gamma(), M - n, nullptr);
  if (black == kNegInf) return kNegInf;
  return log_binomial_coefficient(M, n) + white + black - log_normalizer(M, params.gamma());
}

std::vector<double> polya_log_pmf_table(const PolyaParams& params) {
  const int M = params.M();
  std::vector<double> white;
  std::vector<double> black;
  log_rising_sum(params.eta(), params.gamma(), M, &white);
  log_rising_sum(params.eta_bar(), params.gamma(), M, &black);
  const double norm = log_normalizer(M, params.gamma());

  std::vector<double> out(static_cast<std::size_t>(M) + 1);
  for (int n = 0; n <= M; ++n) {
    const double w = white[static_cast<std::size_t>(n)];
    const double b = black[static_cast<std::size_t>(M - n)];
    out[static_cast<std::size_t>(n)] =
        (w == kNegInf || b == kNegInf) ? kNegInf : log_binomial_coefficient(M, n) + w + b - norm;
  }
  return out;
}

Pmf polya_pmf(const PolyaParams& params) {
  auto logs = polya_log_pmf_table(params);
  std::transform(logs.begin(), logs.end(), logs.begin(), [](double l) { return std::exp(l); });
  return Pmf(std::move(logs));
}

double binomial_log_pmf(int M, double eta, int n) {
  check_index(n, M, "binomial_log_pmf");
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("binomial_log_pmf: eta outside [0, 1]");
  const int m = M - n;
  if ((eta == 0.0 && n > 0) || (eta == 1.0 && m > 0)) return kNegInf;
  const double white = n > 0 ? n * std::log(eta) : 0.0;
  const double black = m > 0 ? m * std::log(1.0 - eta) : 0.0;
  return log_binomial_coefficient(M, n) + white + black;
}

double binomial_pmf(int M, double eta, int n) { return std::exp(binomial_log_pmf(M, eta, n)); }

Pmf binomial_pmf(int M, double eta) {
  if (M < 0) throw DomainError("binomial_pmf: M must be non-negative");
  std::vector<double> probs(static_cast<std::size_t>(M) + 1);
  for (int n = 0; n <= M; ++n) probs[static_cast<std::size_t>(n)] = binomial_pmf(M, eta, n);
  return Pmf(std::move(probs));
}

double negative_binomial_log_pmf(const NegBinParams& nb, int n) {
  if (n < 0) throw DomainError("negative_binomial_log_pmf: n must be >= 0");
  const double coeff = n == 0 ? 0.0 : log_gamma(nb.r + n) - log_gamma(n + 1.0) - log_gamma(nb.r);
  return coeff + nb.r * std::log1p(-nb.p) + n * std::log(nb.p);
}

double negative_binomial_pmf(const NegBinParams& nb, int n) {
  return std::exp(negative_binomial_log_pmf(nb, n));
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  const std::size_t len = std::max(p.size(), q.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double a = i < p.size() ? p[i] : 0.0;
    const double b = i < q.size() ? q[i] : 0.0;
    acc += std::abs(a - b);
  }
  return 0.5 * acc;
}

}  // namespace polya
