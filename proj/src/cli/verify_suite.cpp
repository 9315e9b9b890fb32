#include "polya/cli/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polya/algebra.hpp"
#include "polya/fock.hpp"
#include "polya/limits.hpp"
#include "polya/statistics.hpp"

namespace polya::cli {

namespace {

// Running maximum of a residual across the cases of one check.
struct Worst {
  std::int64_t cases = 0;
  double value = 0.0;

  void add(double v) {
    ++cases;
    if (std::isnan(v) || v > value) value = v;
  }
};

CheckResult finish(std::string name, const Worst& w, Relation rel, double tol) {
  const bool pass = !std::isnan(w.value) && (rel == Relation::le ? w.value <= tol : w.value < tol);
  return {std::move(name), w.cases, w.value, rel, tol, pass};
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

void normalization(const std::vector<PolyaParams>& grid, std::vector<CheckResult>& out) {
  Worst w;
  for (const auto& p : grid) w.add(std::abs(polya_pmf(p).sum() - 1.0));
  out.push_back(finish("normalization", w, Relation::le, 1e-12));
}

void binomial_reduction(const StandardGrid& grid, std::vector<CheckResult>& out) {
  Worst w;
  for (int M : grid.M) {
    for (double eta : grid.eta) {
      const auto polya = polya_pmf(PolyaParams(M, 0.0, eta));
      const auto binom = binomial_pmf(M, eta);
      double d = 0.0;
      for (std::size_t n = 0; n < polya.size(); ++n) d = std::max(d, std::abs(polya[n] - binom[n]));
      w.add(d);
    }
  }
  out.push_back(finish("binomial_reduction", w, Relation::le, 1e-14));
}

void eigen(const std::vector<PolyaParams>& grid, std::vector<CheckResult>& out) {
  Worst w;
  for (const auto& p : grid) w.add(eigen_residual(p));
  out.push_back(finish("eigenvalue_equation", w, Relation::le, 1e-10));
}

void algebra(const StandardGrid& grid, const std::vector<PolyaParams>& points,
             std::vector<CheckResult>& out) {
  Worst relations;
  Worst endpoints;
  Worst negative;
  for (const auto& p : points) {
    if (p.eta() >= 1.0) continue;  // F is singular there
    const auto table = structure_function_table(p);
    endpoints.add(std::max(std::abs(table.values.front()), std::abs(table.values.back())));
    double most_negative = 0.0;
    for (int n = 1; n <= p.M(); ++n) most_negative = std::max(most_negative, -table.values[n]);
    negative.add(most_negative);
    if (p.M() <= grid.algebra_max_M) relations.add(verify_algebra(p, p.M() + 2).max());
  }
  out.push_back(finish("algebra_relations", relations, Relation::le, 1e-11));
  out.push_back(finish("structure_endpoints", endpoints, Relation::le, 0.0));
  out.push_back(finish("structure_nonnegative", negative, Relation::le, 0.0));
}

void contractions(const StandardGrid& grid, std::vector<CheckResult>& out) {
  const auto& bs = grid.bs_schedule;
  const auto bs_sched = make_schedule(BsAnchors{bs.M, bs.eta}, bs.points);
  const auto bs_report = contraction_diagnostic(contraction_target(bs_sched), bs_sched.points);
  Worst final_dev;
  final_dev.add(bs_report.final_deviation);
  out.push_back(finish("su2_contraction_final", final_dev, Relation::le, 1e-4));

  const std::size_t tail = std::min<std::size_t>(4, bs_sched.points.size());
  std::vector<double> g;
  std::vector<double> d;
  for (std::size_t i = bs_sched.points.size() - tail; i < bs_sched.points.size(); ++i) {
    g.push_back(bs_sched.points[i].gamma());
    d.push_back(bs_report.deviations[i]);
  }
  Worst slope;
  slope.add(std::abs(loglog_slope(g, d) - 1.0));
  out.push_back(finish("su2_contraction_slope", slope, Relation::le, 0.2));

  const auto& nbs = grid.nbs_schedule;
  const auto nbs_sched = make_schedule(NbsAnchors{nbs.lambda, nbs.rho, nbs.M_start}, nbs.points);
  const auto nbs_report = contraction_diagnostic(contraction_target(nbs_sched), nbs_sched.points);
  Worst ratio;
  for (std::size_t i = 1; i < nbs_report.deviations.size(); ++i)
    ratio.add(nbs_report.deviations[i] / nbs_report.deviations[i - 1]);
  out.push_back(finish("su11_contraction_decreasing", ratio, Relation::lt, 1.0));
}

void moments(const std::vector<PolyaParams>& grid, std::vector<CheckResult>& out) {
  Worst agreement;
  Worst mean;
  for (const auto& p : grid) {
    const auto c = moments_closed(p);
    const auto b = moments_brute(p);
    double r = std::max({rel_err(b.mean_n, c.mean_n), rel_err(b.mean_n2, c.mean_n2),
                         rel_err(b.var_n, c.var_n)});
    if (b.mean_n > 0.0) r = std::max(r, rel_err(b.q_factor, c.q_factor));
    agreement.add(r);
    mean.add(std::abs(c.mean_n - p.M() * p.eta()));
  }
  out.push_back(finish("moments_closed_vs_brute", agreement, Relation::le, 1e-10));
  out.push_back(finish("mean_equals_M_eta", mean, Relation::le, 0.0));
}

void q_line(const StandardGrid& grid, std::vector<CheckResult>& out) {
  Worst at_one;
  Worst linear;
  Worst crossing;
  Worst single;
  const auto samples = linspace(0.0, 1.0, 11);
  for (int M : grid.M) {
    for (double g : grid.gamma) {
      at_one.add(std::abs(moments_closed(PolyaParams(M, g, 1.0)).q_factor + 1.0));
      const double q0 = mandel_q(M, g, 0.0);
      const double q1 = mandel_q(M, g, 1.0);
      double lin = 0.0;
      for (double e : samples) lin = std::max(lin, std::abs(mandel_q(M, g, e) - (q0 + (q1 - q0) * e)));
      linear.add(lin);
      const double from_line = q0 / (q0 - q1);
      crossing.add(std::max(std::abs(from_line - q_zero_crossing(M, g)),
                            std::abs(mandel_q(M, g, q_zero_crossing(M, g)))));
      if (M == 1)
        for (double e : grid.eta) single.add(std::abs(moments_closed(PolyaParams(1, g, e)).q_factor + e));
    }
  }
  out.push_back(finish("q_at_eta_one", at_one, Relation::le, 1e-14));
  out.push_back(finish("q_linearity", linear, Relation::le, 1e-12));
  out.push_back(finish("q_zero_crossing", crossing, Relation::le, 1e-12));
  out.push_back(finish("q_single_mode", single, Relation::le, 1e-14));
}

void annihilation_power(const std::vector<PolyaParams>& grid, std::vector<CheckResult>& out) {
  Worst identity;
  Worst beyond;
  for (const auto& p : grid) {
    FockVector v = polya_state(p);
    for (int k = 1; k <= p.M() + 1; ++k) {
      v = annihilate(v);
      const auto closed = apply_annihilation_power(p, k);
      if (!closed.mapped || closed.scale == 0.0) {
        beyond.add(norm(v));
        continue;
      }
      // a^k|psi> grows like sqrt(M!); the comparison is made at unit scale.
      identity.add(max_abs_difference(scale(v, 1.0 / closed.scale), polya_state(*closed.mapped)));
    }
  }
  out.push_back(finish("annihilation_power", identity, Relation::le, 1e-11));
  out.push_back(finish("annihilation_beyond_M", beyond, Relation::le, 0.0));
}

void quadratures(const std::vector<PolyaParams>& grid, std::vector<CheckResult>& out) {
  Worst agreement;
  Worst deficit;
  for (const auto& p : grid) {
    const auto c = quadrature_closed(p);
    const auto b = quadrature_brute(p);
    agreement.add(std::max(std::abs(c.var_x - b.var_x), std::abs(c.var_p - b.var_p)));
    deficit.add(0.25 - std::min(c.product, b.product));
  }
  out.push_back(finish("quadrature_closed_vs_brute", agreement, Relation::le, 1e-10));
  out.push_back(finish("uncertainty_deficit", deficit, Relation::le, 1e-10));
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const StandardGrid& grid) {
  const auto points = grid.points();
  std::vector<CheckResult> out;
  normalization(points, out);
  binomial_reduction(grid, out);
  eigen(points, out);
  algebra(grid, points, out);
  contractions(grid, out);
  moments(points, out);
  q_line(grid, out);
  annihilation_power(points, out);
  quadratures(points, out);
  return out;
}

Table verify_table(const std::vector<CheckResult>& results) {
  Table t({"check", "cases", "worst", "relation", "tolerance", "pass"});
  for (const auto& r : results)
    t.add_row({r.name, r.cases, r.worst, std::string(r.relation == Relation::le ? "<=" : "<"),
               r.tolerance, r.pass});
  return t;
}

}  // namespace polya::cli
