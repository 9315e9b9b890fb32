#include "polya/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polya/errors.hpp"

namespace polya {

FockVector::FockVector(std::vector<double> amps) : amps_(std::move(amps)) {
  if (amps_.empty()) throw DomainError("FockVector: dimension must be >= 1");
  for (double a : amps_) {
    if (!std::isfinite(a)) throw DomainError("FockVector: non-finite amplitude");
  }
}

FockVector FockVector::basis(int n, int dim) {
  if (n < 0 || n >= dim) throw DomainError("FockVector::basis: n outside 0..dim-1");
  std::vector<double> amps(static_cast<std::size_t>(dim), 0.0);
  amps[static_cast<std::size_t>(n)] = 1.0;
  return FockVector(std::move(amps));
}

FockVector FockVector::zero(int dim) {
  if (dim < 1) throw DomainError("FockVector::zero: dimension must be >= 1");
  return FockVector(std::vector<double>(static_cast<std::size_t>(dim), 0.0));
}

double FockVector::at_or_zero(int n) const noexcept {
  return (n >= 0 && n < dim()) ? amps_[static_cast<std::size_t>(n)] : 0.0;
}

FockVector polya_state(const PolyaParams& params) {
  const Pmf pmf = polya_pmf(params);
  std::vector<double> amps(pmf.size());
  std::transform(pmf.probs().begin(), pmf.probs().end(), amps.begin(),
                 [](double p) { return std::sqrt(p); });
  return FockVector(std::move(amps));
}

FockVector annihilate(const FockVector& v) {
  const int out_dim = std::max(1, v.dim() - 1);
  std::vector<double> out(static_cast<std::size_t>(out_dim), 0.0);
  for (int n = 0; n + 1 < v.dim(); ++n) {
    out[static_cast<std::size_t>(n)] = std::sqrt(n + 1.0) * v.at_or_zero(n + 1);
  }
  return FockVector(std::move(out));
}

FockVector create(const FockVector& v) {
  std::vector<double> out(static_cast<std::size_t>(v.dim()) + 1, 0.0);
  for (int n = 1; n <= v.dim(); ++n) {
    out[static_cast<std::size_t>(n)] = std::sqrt(static_cast<double>(n)) * v.at_or_zero(n - 1);
  }
  return FockVector(std::move(out));
}

FockVector number_apply(const FockVector& v) {
  std::vector<double> out(v.amps().begin(), v.amps().end());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] *= static_cast<double>(n);
  return FockVector(std::move(out));
}

FockVector add(const FockVector& v, const FockVector& w) {
  const int d = std::max(v.dim(), w.dim());
  std::vector<double> out(static_cast<std::size_t>(d));
  for (int n = 0; n < d; ++n) out[static_cast<std::size_t>(n)] = v.at_or_zero(n) + w.at_or_zero(n);
  return FockVector(std::move(out));
}

FockVector scale(const FockVector& v, double s) {
  std::vector<double> out(v.amps().begin(), v.amps().end());
  for (double& a : out) a *= s;
  return FockVector(std::move(out));
}

double inner_product(const FockVector& v, const FockVector& w) {
  const int d = std::min(v.dim(), w.dim());
  double acc = 0.0;
  for (int n = 0; n < d; ++n) acc += v.at_or_zero(n) * w.at_or_zero(n);
  return acc;
}

double norm(const FockVector& v) { return std::sqrt(inner_product(v, v)); }

double max_abs_difference(const FockVector& v, const FockVector& w) {
  const int d = std::max(v.dim(), w.dim());
  double worst = 0.0;
  for (int n = 0; n < d; ++n) worst = std::max(worst, std::abs(v.at_or_zero(n) - w.at_or_zero(n)));
  return worst;
}

AnnihilationPower apply_annihilation_power(const PolyaParams& params, int k) {
  if (k < 0) throw DomainError("apply_annihilation_power: k must be >= 0, got " + std::to_string(k));
  const int M = params.M();
  if (k > M) return {0.0, std::nullopt};

  const double g = params.gamma();
  const double e = params.eta();
  double product = 1.0;
  for (int i = 0; i < k; ++i) product *= (M - i) * (i * g + e) / (i * g + 1.0);

  const double kg1 = k * g + 1.0;
  return {std::sqrt(product), PolyaParams(M - k, g / kg1, std::min(1.0, (k * g + e) / kg1))};
}

}  // namespace polya
