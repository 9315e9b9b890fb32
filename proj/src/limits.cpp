#include "polya/limits.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polya/errors.hpp"

namespace polya {

const char* to_string(LimitKind kind) noexcept { return kind == LimitKind::bs ? "bs" : "nbs"; }

LimitSchedule make_schedule(const BsAnchors& anchors, int num_points) {
  if (num_points < 2) throw DomainError("make_schedule: num_points must be >= 2");
  if (!(anchors.gamma_start > 0.0) || !(anchors.ratio > 0.0 && anchors.ratio < 1.0)) {
    throw DomainError("make_schedule: BS schedule needs gamma_start > 0 and 0 < ratio < 1");
  }
  // Validates (M, eta).
  const PolyaParams anchor(anchors.M, 0.0, anchors.eta);
  if (anchor.M() < 1) throw DomainError("make_schedule: M must be >= 1");

  LimitSchedule s{LimitKind::bs, {}, BinomialTarget{anchors.M, anchors.eta}};
  for (int i = 0; i < num_points; ++i) {
    s.points.emplace_back(anchors.M, anchors.gamma_start * std::pow(anchors.ratio, i), anchors.eta);
  }
  return s;
}

LimitSchedule make_schedule(const NbsAnchors& anchors, int num_points) {
  if (num_points < 2) throw DomainError("make_schedule: num_points must be >= 2");
  if (!(anchors.lambda > 0.0) || !std::isfinite(anchors.lambda)) {
    throw DomainError("make_schedule: lambda must be positive");
  }
  if (!(anchors.rho > 0.0) || !std::isfinite(anchors.rho)) {
    throw DomainError("make_schedule: rho must be positive");
  }
  if (anchors.M_start < 1 || !(anchors.ratio > 1.0)) {
    throw DomainError("make_schedule: NBS schedule needs M_start >= 1 and ratio > 1");
  }
  if (anchors.lambda > anchors.M_start) {
    throw DomainError("make_schedule: lambda must not exceed M_start (eta = lambda/M <= 1)");
  }

  LimitSchedule s{LimitKind::nbs, {}, NegBinTarget{anchors.lambda, anchors.rho}};
  long long previous = 0;
  for (int i = 0; i < num_points; ++i) {
    const long long m = std::llround(anchors.M_start * std::pow(anchors.ratio, i));
    if (m <= previous || m > 100'000'000) {
      throw DomainError("make_schedule: rounded M values must increase strictly and stay <= 1e8");
    }
    previous = m;
    const double M = static_cast<double>(m);
    s.points.emplace_back(static_cast<int>(m), 1.0 / (M * anchors.rho), anchors.lambda / M);
  }
  return s;
}

std::vector<double> target_pmf(const LimitTarget& target, int support_cap) {
  if (support_cap < 1) throw DomainError("target_pmf: support_cap must be >= 1");
  if (const auto* bin = std::get_if<BinomialTarget>(&target)) {
    const Pmf pmf = binomial_pmf(bin->M, bin->eta);
    return {pmf.probs().begin(), pmf.probs().end()};
  }
  const NegBinParams nb = std::get<NegBinTarget>(target).params();
  std::vector<double> out;
  double cumulative = 0.0;
  for (int n = 0; n <= support_cap; ++n) {
    out.push_back(negative_binomial_pmf(nb, n));
    cumulative += out.back();
    if (1.0 - cumulative < kTargetTailMass) break;
  }
  return out;
}

ConvergenceReport convergence_report(const LimitSchedule& schedule, int support_cap) {
  if (schedule.points.empty()) throw DomainError("convergence_report: empty schedule");
  const std::vector<double> target = target_pmf(schedule.target, support_cap);

  ConvergenceReport report{{}, true, 0.0};
  for (const auto& p : schedule.points) {
    const Pmf pmf = polya_pmf(p);
    report.rows.push_back({p, total_variation(pmf.probs(), target)});
  }
  const std::size_t start = std::max<std::size_t>(report.rows.size() / 2, 1);
  for (std::size_t i = start; i < report.rows.size(); ++i) {
    if (report.rows[i].tv >= report.rows[i - 1].tv) report.tail_strictly_decreasing = false;
  }
  report.final_tv = report.rows.back().tv;
  return report;
}

ContractionTarget contraction_target(const LimitSchedule& schedule) {
  if (const auto* bin = std::get_if<BinomialTarget>(&schedule.target)) {
    return Su2Target{bin->M, bin->eta};
  }
  const auto& nb = std::get<NegBinTarget>(schedule.target);
  return Su11Target{nb.lambda, nb.rho};
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("loglog_slope: need two or more paired points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DomainError("loglog_slope: values must be positive");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> point_mass_pmf(int n) {
  if (n < 0) throw DomainError("point_mass_pmf: n must be >= 0");
  std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
  out.back() = 1.0;
  return out;
}

std::vector<double> poisson_pmf(double lambda, int n_max) {
  if (!(lambda > 0.0) || n_max < 0) throw DomainError("poisson_pmf: need lambda > 0, n_max >= 0");
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    out[static_cast<std::size_t>(n)] = std::exp(n * std::log(lambda) - lambda - log_gamma(n + 1.0));
  }
  return out;
}

std::vector<double> geometric_pmf(double p, int n_max) {
  if (!(p > 0.0 && p < 1.0) || n_max < 0) throw DomainError("geometric_pmf: need 0 < p < 1");
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out[static_cast<std::size_t>(n)] = (1.0 - p) * std::pow(p, n);
  return out;
}

}  // namespace polya
