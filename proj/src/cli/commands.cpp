#include "polya/cli/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>

#include "polya/algebra.hpp"
#include "polya/cli/grid.hpp"
#include "polya/cli/report.hpp"
#include "polya/cli/verify_suite.hpp"
#include "polya/errors.hpp"
#include "polya/fock.hpp"
#include "polya/limits.hpp"
#include "polya/statistics.hpp"
#include "polya/urn.hpp"

namespace polya::cli {

namespace {

constexpr std::array<std::pair<Command, const char*>, 8> kCommandNames{{
    {Command::pmf, "pmf"},
    {Command::state, "state"},
    {Command::moments, "moments"},
    {Command::qline, "qline"},
    {Command::squeeze, "squeeze"},
    {Command::limits, "limits"},
    {Command::urn, "urn"},
    {Command::verify, "verify"},
}};

constexpr int kDefaultLinePoints = 101;
constexpr int kDefaultBsPoints = 8;
constexpr int kDefaultNbsPoints = 4;
constexpr std::uint64_t kDefaultTrials = 1'000'000;
constexpr double kSqueezeGammaMax = 5.0;
constexpr int kNbsSupportCap = 100'000;

std::set<std::string> present_options(const RunConfig& c) {
  std::set<std::string> s;
  if (!c.M.empty()) s.insert("M");
  if (c.gamma) s.insert("gamma");
  if (c.eta) s.insert("eta");
  if (c.points) s.insert("points");
  if (c.seed) s.insert("seed");
  if (c.trials) s.insert("trials");
  if (c.lambda) s.insert("lambda");
  if (c.rho) s.insert("rho");
  if (c.k) s.insert("k");
  if (c.kind) s.insert("kind");
  if (c.grid) s.insert("grid");
  return s;
}

void require(const std::set<std::string>& present, std::initializer_list<const char*> names,
             const char* command) {
  for (const char* n : names)
    if (!present.count(n)) throw UsageError(std::string(command) + " requires --" + n);
}

void allow_only(const std::set<std::string>& present, std::initializer_list<const char*> names,
                const char* command) {
  for (const auto& p : present)
    if (std::none_of(names.begin(), names.end(), [&](const char* n) { return p == n; }))
      throw UsageError("--" + p + " does not apply to " + command);
}

PolyaParams single_params(const RunConfig& c) { return PolyaParams(c.M.front(), *c.gamma, *c.eta); }

std::string command_name(const RunConfig& c) { return to_string(c.command); }

Table pmf_table(const RunConfig& c) {
  const auto p = single_params(c);
  const auto probs = polya_pmf(p);
  const auto logs = polya_log_pmf_table(p);
  Table t({"n", "probability", "log_probability"});
  for (int n = 0; n <= p.M(); ++n) t.add_row({std::int64_t{n}, probs[n], logs[n]});
  return t;
}

Table state_table(const RunConfig& c) {
  const auto p = single_params(c);
  const int k = c.k.value_or(0);
  FockVector direct = polya_state(p);
  for (int i = 0; i < k; ++i) direct = annihilate(direct);
  const auto closed = apply_annihilation_power(p, k);
  const auto mapped = closed.mapped ? scale(polya_state(*closed.mapped), closed.scale)
                                    : FockVector::zero(direct.dim());
  Table t({"n", "direct", "closed_form", "abs_difference"});
  const int dim = std::max(direct.dim(), mapped.dim());
  for (int n = 0; n < dim; ++n) {
    const double a = direct.at_or_zero(n);
    const double b = mapped.at_or_zero(n);
    t.add_row({std::int64_t{n}, a, b, std::abs(a - b)});
  }
  return t;
}

Table moments_table(const RunConfig& c) {
  const auto p = single_params(c);
  const auto closed = moments_closed(p);
  const auto brute = moments_brute(p);
  Table t({"quantity", "closed_form", "brute_force", "discrepancy"});
  const auto row = [&](const char* name, double a, double b) {
    t.add_row({std::string(name), a, b, std::abs(a - b)});
  };
  row("mean_n", closed.mean_n, brute.mean_n);
  row("mean_n2", closed.mean_n2, brute.mean_n2);
  row("var_n", closed.var_n, brute.var_n);
  row("q_factor", closed.q_factor, brute.q_factor);
  return t;
}

Table qline_table(const RunConfig& c) {
  const int M = c.M.front();
  const double g = *c.gamma;
  if (M < 1) throw UsageError("qline requires --M >= 1");
  const double crossing = q_zero_crossing(M, g);
  auto etas = linspace(0.0, 1.0, c.points.value_or(kDefaultLinePoints));
  if (crossing >= 0.0 && crossing <= 1.0 && std::find(etas.begin(), etas.end(), crossing) == etas.end())
    etas.insert(std::upper_bound(etas.begin(), etas.end(), crossing), crossing);
  Table t({"eta", "q_factor", "zero_crossing"});
  for (double e : etas) t.add_row({e, mandel_q(M, g, e), e == crossing});
  return t;
}

Table squeeze_table(int M, int points) {
  const auto gammas = linspace(0.0, kSqueezeGammaMax, points);
  const auto etas = linspace(0.0, 1.0, points);
  const auto scan = squeezing_scan(M, gammas, etas);
  Table t({"M", "gamma", "eta", "var_x", "var_p", "product", "squeezed_x", "squeezed_p"});
  for (const auto& cell : scan.cells) {
    const auto& r = cell.report;
    t.add_row({std::int64_t{M}, cell.gamma, cell.eta, r.var_x, r.var_p, r.product, r.squeezed_x,
               r.squeezed_p});
  }
  return t;
}

Table limits_table(const RunConfig& c) {
  LimitSchedule schedule = [&] {
    if (*c.kind == "bs")
      return make_schedule(BsAnchors{c.M.front(), *c.eta}, c.points.value_or(kDefaultBsPoints));
    NbsAnchors anchors{*c.lambda, *c.rho};
    if (!c.M.empty()) anchors.M_start = c.M.front();
    return make_schedule(anchors, c.points.value_or(kDefaultNbsPoints));
  }();
  const int cap = schedule.kind == LimitKind::bs ? schedule.points.front().M() : kNbsSupportCap;
  const auto conv = convergence_report(schedule, cap);
  const auto ladder = contraction_diagnostic(contraction_target(schedule), schedule.points);
  Table t({"step", "M", "gamma", "eta", "tv", "ladder_deviation"});
  for (std::size_t i = 0; i < conv.rows.size(); ++i) {
    const auto& p = conv.rows[i].params;
    t.add_row({static_cast<std::int64_t>(i), std::int64_t{p.M()}, p.gamma(), p.eta(), conv.rows[i].tv,
               ladder.deviations[i]});
  }
  return t;
}

Table urn_table(const RunConfig& c) {
  const auto p = single_params(c);
  const auto spec = polya_to_urn(p);
  const auto counts = sample_counts(spec, c.trials.value_or(kDefaultTrials), c.seed.value_or(0));
  const auto empirical = normalize_histogram(counts);
  const auto exact = polya_pmf(p);
  const double tv = total_variation(empirical, exact.probs());
  Table t({"n", "count", "empirical", "exact", "tv"});
  for (int n = 0; n <= p.M(); ++n)
    t.add_row({std::int64_t{n}, static_cast<std::int64_t>(counts[n]), empirical[n], exact[n], tv});
  return t;
}

void emit(const Table& t, const RunConfig& c, const std::filesystem::path* path, std::ostream& out) {
  const auto write = [&](std::ostream& os) {
    if (c.format == Format::csv)
      write_csv(t, os);
    else
      write_json(t, command_name(c), os);
  };
  if (!path) {
    write(out);
    out.flush();
    if (!out) throw IoError("error writing output");
    return;
  }
  std::ofstream f(*path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path->string() + " for writing");
  write(f);
  f.close();
  if (!f) throw IoError("error writing " + path->string());
}

// sq.csv with M = 5 -> sq_M5.csv
std::filesystem::path per_M_path(const std::filesystem::path& base, int M) {
  auto name = base.stem().string() + "_M" + std::to_string(M) + base.extension().string();
  return base.parent_path() / name;
}

}  // namespace

const char* to_string(Command c) noexcept {
  for (const auto& [cmd, name] : kCommandNames)
    if (cmd == c) return name;
  return "?";
}

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [cmd, n] : kCommandNames)
    if (name == n) return cmd;
  return std::nullopt;
}

void validate(const RunConfig& c) {
  const auto present = present_options(c);
  const char* name = to_string(c.command);
  if (c.command != Command::squeeze && c.M.size() > 1) throw UsageError(std::string(name) + " takes a single --M");
  switch (c.command) {
    case Command::pmf:
    case Command::moments:
      require(present, {"M", "gamma", "eta"}, name);
      allow_only(present, {"M", "gamma", "eta"}, name);
      break;
    case Command::state:
      require(present, {"M", "gamma", "eta"}, name);
      allow_only(present, {"M", "gamma", "eta", "k"}, name);
      if (c.k && *c.k < 0) throw UsageError("--k must be >= 0");
      break;
    case Command::qline:
      require(present, {"M", "gamma"}, name);
      allow_only(present, {"M", "gamma", "points"}, name);
      if (c.points && *c.points < 2) throw UsageError("--points must be >= 2");
      break;
    case Command::squeeze:
      allow_only(present, {"M", "points"}, name);
      if (c.points && *c.points < 2) throw UsageError("--points must be >= 2");
      for (int m : c.M)
        if (m < 0) throw UsageError("--M must be >= 0");
      break;
    case Command::limits:
      require(present, {"kind"}, name);
      if (*c.kind == "bs") {
        require(present, {"M", "eta"}, "limits --kind bs");
        allow_only(present, {"kind", "M", "eta", "points"}, "limits --kind bs");
      } else if (*c.kind == "nbs") {
        require(present, {"lambda", "rho"}, "limits --kind nbs");
        allow_only(present, {"kind", "M", "lambda", "rho", "points"}, "limits --kind nbs");
      } else {
        throw UsageError("--kind must be bs or nbs");
      }
      if (c.points && *c.points < 2) throw UsageError("--points must be >= 2");
      break;
    case Command::urn:
      require(present, {"M", "gamma", "eta"}, name);
      allow_only(present, {"M", "gamma", "eta", "trials", "seed"}, name);
      if (c.trials && *c.trials == 0) throw UsageError("--trials must be >= 1");
      break;
    case Command::verify:
      require(present, {"grid"}, name);
      allow_only(present, {"grid"}, name);
      break;
  }
}

int run(const RunConfig& c, std::ostream& out) {
  validate(c);
  std::optional<std::filesystem::path> path;
  if (c.out) path = *c.out;
  const auto* target = path ? &*path : nullptr;

  switch (c.command) {
    case Command::pmf: emit(pmf_table(c), c, target, out); break;
    case Command::state: emit(state_table(c), c, target, out); break;
    case Command::moments: emit(moments_table(c), c, target, out); break;
    case Command::qline: emit(qline_table(c), c, target, out); break;
    case Command::limits: emit(limits_table(c), c, target, out); break;
    case Command::urn: emit(urn_table(c), c, target, out); break;
    case Command::squeeze: {
      const std::vector<int> Ms = c.M.empty() ? std::vector<int>{5, 20} : c.M;
      const int points = c.points.value_or(kDefaultLinePoints);
      if (path && Ms.size() > 1) {
        for (int M : Ms) {
          const auto p = per_M_path(*path, M);
          emit(squeeze_table(M, points), c, &p, out);
        }
      } else {
        Table all = squeeze_table(Ms.front(), points);
        for (std::size_t i = 1; i < Ms.size(); ++i)
          for (auto row : squeeze_table(Ms[i], points).rows()) all.add_row(std::move(row));
        emit(all, c, target, out);
      }
      break;
    }
    case Command::verify: {
      const auto results = run_verify_suite(load_grid(*c.grid));
      emit(verify_table(results), c, target, out);
      const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
      return ok ? kExitOk : kExitVerificationFailed;
    }
  }
  return kExitOk;
}

int run_guarded(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    return run(c, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

}  // namespace polya::cli
