#pragma once

#include <span>
#include <variant>
#include <vector>

#include "polya/algebra.hpp"
#include "polya/distributions.hpp"

namespace polya {

enum class LimitKind { bs, nbs };

const char* to_string(LimitKind kind) noexcept;

/// binomial(M, eta): gamma -> 0 with (M, eta) fixed.
struct BinomialTarget {
  int M;
  double eta;
};

/// Negative binomial with r = lambda rho, p = 1/(1+rho):
/// M -> infinity with M eta = lambda, M gamma = 1/rho.
struct NegBinTarget {
  double lambda;
  double rho;

  NegBinParams params() const { return {lambda * rho, 1.0 / (1.0 + rho)}; }
};

using LimitTarget = std::variant<BinomialTarget, NegBinTarget>;

struct LimitSchedule {
  LimitKind kind;
  std::vector<PolyaParams> points;
  LimitTarget target;
};

struct BsAnchors {
  int M;
  double eta;
  double gamma_start = 0.1;
  double ratio = 0.1;
};

struct NbsAnchors {
  double lambda;
  double rho;
  int M_start = 10;
  double ratio = 10.0;
};

/// gamma_i = gamma_start * ratio^i.
LimitSchedule make_schedule(const BsAnchors& anchors, int num_points);
/// M_i = round(M_start * ratio^i), strictly increasing; eta = lambda/M, gamma = 1/(M rho).
LimitSchedule make_schedule(const NbsAnchors& anchors, int num_points);

inline constexpr double kTargetTailMass = 1e-12;

/// The limiting pmf. The negative binomial is cut where the remaining tail
/// mass drops below kTargetTailMass, or at n = support_cap.
std::vector<double> target_pmf(const LimitTarget& target, int support_cap);

struct ConvergenceRow {
  PolyaParams params;
  double tv;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  bool tail_strictly_decreasing;  // over the final half of the schedule
  double final_tv;
};

/// Total variation between the Polya pmf at each schedule point and the target.
ConvergenceReport convergence_report(const LimitSchedule& schedule, int support_cap);

/// The matching ladder-operator contraction target for the schedule.
ContractionTarget contraction_target(const LimitSchedule& schedule);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

// Endpoint families reached through the binomial and negative binomial
// laws, at the distribution level.

/// Number state |n>: all mass at n.
std::vector<double> point_mass_pmf(int n);
/// Coherent state: Poisson(lambda) on 0..n_max.
std::vector<double> poisson_pmf(double lambda, int n_max);
/// Phase state: (1-p) p^n on 0..n_max.
std::vector<double> geometric_pmf(double p, int n_max);

}  // namespace polya
