#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polya/cli/grid.hpp"
#include "polya/cli/report.hpp"

namespace polya::cli {

enum class Relation { le, lt };

struct CheckResult {
  std::string name;
  std::int64_t cases;
  double worst;
  Relation relation;  // pass iff worst <relation> tolerance
  double tolerance;
  bool pass;
};

/// Invariant checks over the grid: normalization, binomial reduction,
/// eigenvalue equation, deformed algebra, contractions, moments, Q-line,
/// a^k identity, quadratures and the uncertainty bound.
std::vector<CheckResult> run_verify_suite(const StandardGrid& grid);

Table verify_table(const std::vector<CheckResult>& results);

}  // namespace polya::cli
