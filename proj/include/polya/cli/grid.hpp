#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "polya/distributions.hpp"

namespace polya::cli {

struct BsScheduleSpec {
  int M;
  double eta;
  int points;
};

struct NbsScheduleSpec {
  double lambda;
  double rho;
  int M_start;
  int points;
};

struct StandardGrid {
  int version;
  std::vector<int> M;
  std::vector<double> gamma;
  std::vector<double> eta;
  int algebra_max_M;
  BsScheduleSpec bs_schedule;
  NbsScheduleSpec nbs_schedule;

  /// Every (M, gamma, eta) combination, M-major.
  std::vector<PolyaParams> points() const;
};

/// Throws UsageError on malformed content.
StandardGrid parse_grid(std::string_view text);

/// Throws IoError when the file cannot be read.
StandardGrid load_grid(const std::filesystem::path& path);

}  // namespace polya::cli
