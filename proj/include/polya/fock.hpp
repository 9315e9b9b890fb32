#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polya/distributions.hpp"

namespace polya {

/// Real amplitudes <n|psi> on the truncated basis |0>..|dim-1>.
class FockVector {
 public:
  explicit FockVector(std::vector<double> amps);

  /// The number state |n> in a space of dimension `dim` (> n).
  static FockVector basis(int n, int dim);
  static FockVector zero(int dim);

  int dim() const noexcept { return static_cast<int>(amps_.size()); }
  std::span<const double> amps() const noexcept { return amps_; }
  double operator[](std::size_t n) const { return amps_.at(n); }
  /// Amplitude at n, or 0 outside the truncation.
  double at_or_zero(int n) const noexcept;

 private:
  std::vector<double> amps_;
};

/// amps[n] = sqrt(P_n) for n = 0..M (non-negative root).
FockVector polya_state(const PolyaParams& params);

/// a: out[n] = sqrt(n+1) v[n+1]. Dimension shrinks by one, never below 1.
FockVector annihilate(const FockVector& v);
/// a^dagger: out[n] = sqrt(n) v[n-1]. Dimension grows by one.
FockVector create(const FockVector& v);
/// N = a^dagger a: out[n] = n v[n].
FockVector number_apply(const FockVector& v);

FockVector add(const FockVector& v, const FockVector& w);
FockVector scale(const FockVector& v, double s);

/// Euclidean pairing; the shorter vector is zero-padded.
double inner_product(const FockVector& v, const FockVector& w);
double norm(const FockVector& v);
double max_abs_difference(const FockVector& v, const FockVector& w);

/// a^k |M, gamma, eta> = scale * |mapped>.
///
/// For k <= M, scale = [prod_{i<k} (M-i) (i gamma + eta)/(i gamma + 1)]^{1/2}
/// and mapped = (M-k, gamma/(k gamma + 1), (k gamma + eta)/(k gamma + 1)).
/// For k > M the state is annihilated: scale = 0 and `mapped` is empty.
struct AnnihilationPower {
  double scale;
  std::optional<PolyaParams> mapped;
};

AnnihilationPower apply_annihilation_power(const PolyaParams& params, int k);

}  // namespace polya
