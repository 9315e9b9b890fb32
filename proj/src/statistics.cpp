#include "polya/statistics.hpp"

#include <cmath>
#include <limits>

#include "polya/errors.hpp"
#include "polya/fock.hpp"

namespace polya {

namespace {

constexpr double kVacuumVariance = 0.5;

// sum_n sqrt(P_n(params) P_n(mapped)) in log space, over the shorter support.
double overlap_sum(const PolyaParams& params, const PolyaParams& mapped) {
  const auto lhs = polya_log_pmf_table(params);
  const auto rhs = polya_log_pmf_table(mapped);
  const std::size_t len = std::min(lhs.size(), rhs.size());
  double acc = 0.0;
  for (std::size_t n = 0; n < len; ++n) acc += std::exp(0.5 * (lhs[n] + rhs[n]));
  return acc;
}

QuadratureReport make_quadrature(double var_x, double var_p, Source source) {
  return {var_x, var_p, var_x * var_p, var_x < kVacuumVariance, var_p < kVacuumVariance, source};
}

}  // namespace

const char* to_string(Source s) noexcept {
  return s == Source::closed_form ? "closed_form" : "brute_force";
}

// Rearranged so that eta = 1 gives -1 and M = 1 gives -eta without rounding.
double mandel_q(int M, double gamma, double eta) {
  return (M - 1) * gamma * (1.0 - eta) / (1.0 + gamma) - eta;
}

MomentReport moments_closed(const PolyaParams& params) {
  const int M = params.M();
  const double g = params.gamma();
  const double e = params.eta();
  const double mean = M * e;
  const double mean2 = mean + mean * (M - 1) * (e + g) / (1.0 + g);
  const double var = mean * (M * g + 1.0) * (1.0 - e) / (1.0 + g);
  return {mean, mean2, var, mandel_q(M, g, e), Source::closed_form};
}

MomentReport moments_brute(const PolyaParams& params) {
  const Pmf pmf = polya_pmf(params);
  double mean = 0.0;
  double mean2 = 0.0;
  for (std::size_t n = 0; n < pmf.size(); ++n) {
    const double x = static_cast<double>(n);
    mean += x * pmf[n];
    mean2 += x * x * pmf[n];
  }
  double var = 0.0;
  for (std::size_t n = 0; n < pmf.size(); ++n) {
    const double d = static_cast<double>(n) - mean;
    var += d * d * pmf[n];
  }
  const double q = mean > 0.0 ? (var - mean) / mean : std::numeric_limits<double>::quiet_NaN();
  return {mean, mean2, var, q, Source::brute_force};
}

double q_zero_crossing(int M, double gamma) {
  if (M < 1) throw DomainError("q_zero_crossing: M must be >= 1");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("q_zero_crossing: gamma must be >= 0");
  return (M - 1) * gamma / (M * gamma + 1.0);
}

QuadratureReport quadrature_closed(const PolyaParams& params) {
  const int M = params.M();
  const double g = params.gamma();
  const double e = params.eta();
  const double mean = M * e;

  // <a> = sqrt(M eta) * overlap with the one-photon-removed state.
  double first = 0.0;
  if (M >= 1 && mean > 0.0) {
    const PolyaParams once(M - 1, g / (g + 1.0), (g + e) / (g + 1.0));
    first = std::sqrt(mean) * overlap_sum(params, once);
  }
  // <a^2>
  double second = 0.0;
  if (M >= 2 && mean > 0.0) {
    const PolyaParams twice(M - 2, g / (2.0 * g + 1.0), (2.0 * g + e) / (2.0 * g + 1.0));
    second = std::sqrt(mean * (M - 1) * (e + g) / (g + 1.0)) * overlap_sum(params, twice);
  }

  const double var_x = kVacuumVariance + mean + second - 2.0 * first * first;
  const double var_p = kVacuumVariance + mean - second;
  return make_quadrature(var_x, var_p, Source::closed_form);
}

QuadratureReport quadrature_brute(const PolyaParams& params) {
  const FockVector psi = polya_state(params);
  const FockVector a_psi = annihilate(psi);
  const FockVector ad_psi = create(psi);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // x|psi>, and q = (a^dagger - a)|psi>/sqrt(2) with p|psi> = i q.
  const FockVector x_psi = scale(add(ad_psi, a_psi), inv_sqrt2);
  const FockVector q_psi = scale(add(ad_psi, scale(a_psi, -1.0)), inv_sqrt2);

  // <p> = i <psi|q> is real and <psi|q> is real here, so <p> = 0.
  const double mean_x = inner_product(psi, x_psi);
  const double var_x = inner_product(x_psi, x_psi) - mean_x * mean_x;
  const double var_p = inner_product(q_psi, q_psi);
  return make_quadrature(var_x, var_p, Source::brute_force);
}

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 1) throw DomainError("linspace: points must be >= 1");
  if (points == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  }
  out.back() = hi;
  return out;
}

SqueezingScan squeezing_scan(int M, std::span<const double> gamma_axis,
                             std::span<const double> eta_axis) {
  if (gamma_axis.empty() || eta_axis.empty()) throw DomainError("squeezing_scan: empty axis");
  SqueezingScan scan{M, {gamma_axis.begin(), gamma_axis.end()}, {eta_axis.begin(), eta_axis.end()},
                     {}, {}, {}};
  scan.cells.reserve(gamma_axis.size() * eta_axis.size());
  for (double g : gamma_axis) {
    for (double e : eta_axis) {
      scan.cells.push_back({g, e, quadrature_closed(PolyaParams(M, g, e))});
    }
  }
  scan.min_var_x = scan.cells.front();
  scan.min_var_p = scan.cells.front();
  for (const auto& cell : scan.cells) {
    if (cell.report.var_x < scan.min_var_x.report.var_x) scan.min_var_x = cell;
    if (cell.report.var_p < scan.min_var_p.report.var_p) scan.min_var_p = cell;
  }
  return scan;
}

}  // namespace polya
