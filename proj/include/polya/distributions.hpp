#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace polya {

/// Parameters (M, gamma, eta) of the Polya distribution.
///
/// The domain is closed: gamma = 0 is the binomial limit and eta in {0, 1}
/// gives point masses. M = 0 is admitted as the zero-photon state; it is
/// what the annihilation map produces after exhausting every draw.
class PolyaParams {
 public:
  PolyaParams(int M, double gamma, double eta);

  int M() const noexcept { return M_; }
  double gamma() const noexcept { return gamma_; }
  double eta() const noexcept { return eta_; }
  double eta_bar() const noexcept { return 1.0 - eta_; }

  friend bool operator==(const PolyaParams&, const PolyaParams&) = default;

 private:
  int M_;
  double gamma_;
  double eta_;
};

/// Probability mass over photon numbers n = 0..support_max().
class Pmf {
 public:
  explicit Pmf(std::vector<double> probs);

  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t n) const { return probs_.at(n); }
  std::size_t size() const noexcept { return probs_.size(); }
  int support_max() const noexcept { return static_cast<int>(probs_.size()) - 1; }
  double sum() const noexcept;

 private:
  std::vector<double> probs_;
};

/// Negative binomial law C(r+n-1, n) (1-p)^r p^n.
struct NegBinParams {
  NegBinParams(double r, double p);

  double r;
  double p;
};

/// Thread-safe log-gamma for positive arguments.
double log_gamma(double x);

/// log C(n, k) for integers 0 <= k <= n.
double log_binomial_coefficient(int n, int k);

/// Natural log of the Polya probability of n photons.
///
/// Evaluated factor by factor as
///   log C(M,n) + sum_{k<n} log(eta + k gamma) + sum_{k<M-n} log(eta_bar + k gamma)
///              - sum_{1<=k<M} log(1 + k gamma).
/// An exactly-zero factor yields -infinity. Empty products are 1.
double polya_log_pmf(const PolyaParams& params, int n);

/// All log-probabilities n = 0..M; bit-identical to polya_log_pmf(params, n).
std::vector<double> polya_log_pmf_table(const PolyaParams& params);

/// Exponentiated log-pmf. Not renormalized: the sum defect is an accuracy
/// observable.
Pmf polya_pmf(const PolyaParams& params);

double binomial_log_pmf(int M, double eta, int n);
double binomial_pmf(int M, double eta, int n);
Pmf binomial_pmf(int M, double eta);

double negative_binomial_log_pmf(const NegBinParams& nb, int n);
double negative_binomial_pmf(const NegBinParams& nb, int n);

/// Half the L1 distance; the shorter vector is zero-padded.
double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace polya
