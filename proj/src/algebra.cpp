#include "polya/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polya/errors.hpp"

namespace polya {

namespace {

void require_regular(const PolyaParams& p, const char* op) {
  if (p.eta() == 1.0) {
    if (p.gamma() == 0.0) {
      throw DomainError(std::string(op) + ": gamma = 0, eta = 1 is singular", "bs-degenerate");
    }
    throw DomainError(std::string(op) + ": eta = 1 makes the normalization singular", "singular");
  }
}

double tail_max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

double structure_function(const PolyaParams& params, int n) {
  const int M = params.M();
  if (n < 0 || n > M + 1) {
    throw DomainError("structure_function: n=" + std::to_string(n) + " outside 0..M+1");
  }
  require_regular(params, "structure_function");

  const double counting = static_cast<double>(n) * static_cast<double>(M - n + 1);
  const double g = params.gamma();
  if (g == 0.0) return counting + 0.0;

  const double e = params.eta();
  const double numerator = counting * (params.eta_bar() + g * (M - n)) * (e + g * (n - 1));
  const double denominator = (1.0 - e) * (g * M + 1.0) * (g * M + e);
  return numerator / denominator + 0.0;
}

StructureFunctionTable structure_function_table(const PolyaParams& params) {
  std::vector<double> values(static_cast<std::size_t>(params.M()) + 2);
  for (int n = 0; n <= params.M() + 1; ++n) {
    values[static_cast<std::size_t>(n)] = structure_function(params, n);
  }
  return {std::move(values), params};
}

LoweringPrefactor lowering_prefactor(const PolyaParams& params) {
  require_regular(params, "lowering_prefactor");
  const double g = params.gamma();
  if (g == 0.0) {
    throw DomainError("lowering_prefactor: the explicit form needs gamma > 0", "bs-limit");
  }
  const int M = params.M();
  return {g / std::sqrt((1.0 - params.eta()) * (1.0 + M * g) * (M * g + params.eta()))};
}

double lowering_coefficient(const PolyaParams& params, int n) {
  if (n < 0) throw DomainError("lowering_coefficient: n must be >= 0");
  require_regular(params, "lowering_coefficient");
  const int M = params.M();
  if (n == 0 || n > M + 1) return 0.0;

  // Number factors act on |n-1>, the state after `a`.
  const int m = n - 1;
  const double g = params.gamma();
  if (g == 0.0) return std::sqrt(static_cast<double>(M - m) * static_cast<double>(n));

  const double c = lowering_prefactor(params).c;
  const double inner =
      (M - m) * (params.eta_bar() / g + (M - m - 1)) * (params.eta() / g + m);
  return c * std::sqrt(inner) * std::sqrt(static_cast<double>(n));
}

FockVector lowering_apply(const PolyaParams& params, const FockVector& v) {
  const int out_dim = std::max(1, v.dim() - 1);
  std::vector<double> out(static_cast<std::size_t>(out_dim), 0.0);
  for (int n = 0; n + 1 < v.dim(); ++n) {
    out[static_cast<std::size_t>(n)] = lowering_coefficient(params, n + 1) * v.at_or_zero(n + 1);
  }
  return FockVector(std::move(out));
}

FockVector raising_apply(const PolyaParams& params, const FockVector& v) {
  std::vector<double> out(static_cast<std::size_t>(v.dim()) + 1, 0.0);
  for (int n = 1; n <= v.dim(); ++n) {
    out[static_cast<std::size_t>(n)] = lowering_coefficient(params, n) * v.at_or_zero(n - 1);
  }
  return FockVector(std::move(out));
}

Eigen::MatrixXd lowering_matrix(const PolyaParams& params, int dim) {
  if (dim < 1) throw DomainError("lowering_matrix: dim must be >= 1");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = lowering_coefficient(params, n);
  return a;
}

Eigen::MatrixXd raising_matrix(const PolyaParams& params, int dim) {
  return lowering_matrix(params, dim).transpose();
}

Eigen::MatrixXd number_matrix(int dim) {
  if (dim < 1) throw DomainError("number_matrix: dim must be >= 1");
  return Eigen::VectorXd::LinSpaced(dim, 0.0, dim - 1.0).asDiagonal();
}

double AlgebraResiduals::max() const noexcept {
  return std::max({number_lowering, number_raising, raising_lowering, lowering_raising, leakage});
}

AlgebraResiduals verify_algebra(const PolyaParams& params, int dim) {
  const int M = params.M();
  if (dim < M + 2) throw DomainError("verify_algebra: dim must be >= M+2");

  const Eigen::MatrixXd lower = lowering_matrix(params, dim);
  const Eigen::MatrixXd raise = raising_matrix(params, dim);
  const Eigen::MatrixXd number = number_matrix(dim);

  const Eigen::MatrixXd comm_lower = number * lower - lower * number + lower;
  const Eigen::MatrixXd comm_raise = number * raise - raise * number - raise;
  const Eigen::MatrixXd raise_lower = raise * lower;
  const Eigen::MatrixXd lower_raise = lower * raise;

  const int block = M + 1;
  Eigen::VectorXd f_n(block);
  Eigen::VectorXd f_n1(block);
  for (int n = 0; n <= M; ++n) {
    f_n(n) = structure_function(params, n);
    f_n1(n) = structure_function(params, n + 1);
  }

  AlgebraResiduals r{};
  r.number_lowering = tail_max_abs(comm_lower.topLeftCorner(block, block));
  r.number_raising = tail_max_abs(comm_raise.topLeftCorner(block, block));
  r.raising_lowering =
      tail_max_abs(raise_lower.topLeftCorner(block, block) - Eigen::MatrixXd(f_n.asDiagonal()));
  r.lowering_raising =
      tail_max_abs(lower_raise.topLeftCorner(block, block) - Eigen::MatrixXd(f_n1.asDiagonal()));
  r.leakage = std::max(tail_max_abs(raise.bottomLeftCorner(dim - block, block)),
                       tail_max_abs(lower.bottomLeftCorner(dim - block, block)));
  return r;
}

double eigen_residual(const PolyaParams& params) {
  const int M = params.M();
  const double g = params.gamma();
  const double e = params.eta();
  const double eb = params.eta_bar();
  const FockVector psi = polya_state(params);
  const FockVector a_psi = annihilate(psi);

  std::vector<double> lhs(static_cast<std::size_t>(M) + 1, 0.0);
  std::vector<double> rhs(static_cast<std::size_t>(M) + 1, 0.0);
  for (int m = 0; m < M; ++m) {
    const auto i = static_cast<std::size_t>(m);
    const double remaining = M - m;
    if (g > 0.0) {
      lhs[i] = g * std::sqrt(remaining * (eb / g + remaining - 1.0) * (e / g + m)) * a_psi[i];
      rhs[i] = g * remaining * (e / g + m) * psi[i];
    } else {
      lhs[i] = std::sqrt(remaining * eb * e) * a_psi[i];
      rhs[i] = remaining * e * psi[i];
    }
  }
  return max_abs_difference(FockVector(std::move(lhs)), FockVector(std::move(rhs)));
}

namespace {

constexpr double kScheduleTol = 1e-12;

int resolve_window(const ContractionTarget& target, std::span<const PolyaParams> schedule, int window) {
  int min_m = schedule.front().M();
  for (const auto& p : schedule) min_m = std::min(min_m, p.M());
  if (window < 0) window = std::holds_alternative<Su2Target>(target) ? min_m : 8;
  if (window < 1 || window > min_m) {
    throw DomainError("contraction_diagnostic: window must lie in 1..min(M)");
  }
  return window;
}

void validate_schedule(const Su2Target& t, std::span<const PolyaParams> schedule) {
  double previous = schedule.front().gamma();
  for (const auto& p : schedule) {
    if (p.M() != t.M || p.eta() != t.eta) {
      throw DomainError("contraction_diagnostic: su(2) schedule must keep (M, eta) fixed");
    }
    if (p.gamma() > previous) {
      throw DomainError("contraction_diagnostic: su(2) schedule must drive gamma down");
    }
    previous = p.gamma();
  }
}

void validate_schedule(const Su11Target& t, std::span<const PolyaParams> schedule) {
  if (!(t.lambda > 0.0) || !(t.rho > 0.0)) {
    throw DomainError("contraction_diagnostic: lambda and rho must be positive");
  }
  int previous = 0;
  for (const auto& p : schedule) {
    const double m = p.M();
    if (std::abs(m * p.eta() - t.lambda) > kScheduleTol * t.lambda ||
        std::abs(m * p.gamma() * t.rho - 1.0) > kScheduleTol) {
      throw DomainError("contraction_diagnostic: su(1,1) schedule must hold M eta = lambda, "
                        "M gamma = 1/rho");
    }
    if (p.M() <= previous) {
      throw DomainError("contraction_diagnostic: su(1,1) schedule must drive M up");
    }
    previous = p.M();
  }
}

double target_coefficient(const Su2Target& t, int n) {
  return std::sqrt(static_cast<double>(t.M - n + 1) * static_cast<double>(n));
}

double target_coefficient(const Su11Target& t, int n) {
  return std::sqrt((t.lambda * t.rho + (n - 1)) * n);
}

}  // namespace

ContractionReport contraction_diagnostic(const ContractionTarget& target,
                                         std::span<const PolyaParams> schedule, int window) {
  if (schedule.empty()) throw DomainError("contraction_diagnostic: empty schedule");
  std::visit([&](const auto& t) { validate_schedule(t, schedule); }, target);
  window = resolve_window(target, schedule, window);

  const int dim = window + 1;
  Eigen::MatrixXd reference = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 1; n <= window; ++n) {
    reference(n - 1, n) = std::visit([n](const auto& t) { return target_coefficient(t, n); }, target);
  }

  ContractionReport report{};
  report.window = window;
  for (const auto& p : schedule) {
    report.deviations.push_back((lowering_matrix(p, dim) - reference).cwiseAbs().maxCoeff());
  }

  const std::size_t start = report.deviations.size() / 2;
  report.tail_nonincreasing = true;
  report.tail_strictly_decreasing = true;
  for (std::size_t i = std::max<std::size_t>(start, 1); i < report.deviations.size(); ++i) {
    if (report.deviations[i] > report.deviations[i - 1]) report.tail_nonincreasing = false;
    if (report.deviations[i] >= report.deviations[i - 1]) report.tail_strictly_decreasing = false;
  }
  report.final_deviation = report.deviations.back();
  return report;
}

}  // namespace polya
