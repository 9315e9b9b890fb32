#pragma once

#include <span>
#include <vector>

#include "polya/distributions.hpp"

namespace polya {

enum class Source { closed_form, brute_force };

const char* to_string(Source s) noexcept;

/// Photon-number moments and the Mandel Q-factor.
struct MomentReport {
  double mean_n;
  double mean_n2;
  double var_n;
  double q_factor;  // NaN from brute force when <N> = 0 (Q is 0/0 there)
  Source source;
};

/// Quadrature variances for x = (a^dagger + a)/sqrt(2), p = i(a^dagger - a)/sqrt(2).
struct QuadratureReport {
  double var_x;
  double var_p;
  double product;
  bool squeezed_x;
  bool squeezed_p;
  Source source;
};

/// <N> = M eta, <N^2> = M eta + M eta (M-1)(eta+gamma)/(1+gamma),
/// var = M eta (M gamma + 1)(1 - eta)/(1 + gamma),
/// Q = [(M-1) gamma - eta (M gamma + 1)] / (1 + gamma).
MomentReport moments_closed(const PolyaParams& params);

/// Direct sums over the pmf.
MomentReport moments_brute(const PolyaParams& params);

/// Q as a function of eta at fixed (M, gamma); linear in eta.
double mandel_q(int M, double gamma, double eta);

/// eta at which the Q-line crosses zero: (M-1) gamma / (M gamma + 1).
double q_zero_crossing(int M, double gamma);

/// Variances from the closed sums over overlaps of the Polya pmf with the
/// pmfs of a|psi> and a^2|psi>.
QuadratureReport quadrature_closed(const PolyaParams& params);

/// Variances from ladder actions on the Fock vector of the state.
QuadratureReport quadrature_brute(const PolyaParams& params);

struct ScanCell {
  double gamma;
  double eta;
  QuadratureReport report;
};

struct SqueezingScan {
  int M;
  std::vector<double> gamma_axis;
  std::vector<double> eta_axis;
  std::vector<ScanCell> cells;  // gamma-major: cells[i * eta_axis.size() + j]
  ScanCell min_var_x;
  ScanCell min_var_p;

  const ScanCell& at(std::size_t gamma_index, std::size_t eta_index) const {
    return cells.at(gamma_index * eta_axis.size() + eta_index);
  }
};

/// Closed-form variances on the (gamma, eta) grid; ties in the minima go to
/// the first cell in gamma-major order.
SqueezingScan squeezing_scan(int M, std::span<const double> gamma_axis,
                             std::span<const double> eta_axis);

/// `points` evenly spaced values on [lo, hi], endpoints exact.
std::vector<double> linspace(double lo, double hi, int points);

}  // namespace polya
