#include "polya/cli/grid.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "polya/cli/config.hpp"

namespace polya::cli {

std::vector<PolyaParams> StandardGrid::points() const {
  std::vector<PolyaParams> out;
  out.reserve(M.size() * gamma.size() * eta.size());
  for (int m : M)
    for (double g : gamma)
      for (double e : eta) out.emplace_back(m, g, e);
  return out;
}

StandardGrid parse_grid(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    StandardGrid grid{
        j.at("version").get<int>(),
        j.at("M").get<std::vector<int>>(),
        j.at("gamma").get<std::vector<double>>(),
        j.at("eta").get<std::vector<double>>(),
        j.at("algebra_max_M").get<int>(),
        {j.at("bs_schedule").at("M").get<int>(), j.at("bs_schedule").at("eta").get<double>(),
         j.at("bs_schedule").at("points").get<int>()},
        {j.at("nbs_schedule").at("lambda").get<double>(),
         j.at("nbs_schedule").at("rho").get<double>(),
         j.at("nbs_schedule").at("M_start").get<int>(),
         j.at("nbs_schedule").at("points").get<int>()},
    };
    if (grid.version != 1) throw UsageError("unsupported grid version " + std::to_string(grid.version));
    if (grid.M.empty() || grid.gamma.empty() || grid.eta.empty())
      throw UsageError("grid axes must be non-empty");
    // Surfaces out-of-domain entries here rather than midway through a run.
    (void)grid.points();
    return grid;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed grid config: ") + e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(std::string("grid config out of domain: ") + e.what());
  }
}

StandardGrid load_grid(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read grid config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading grid config " + path.string());
  return parse_grid(buf.str());
}

}  // namespace polya::cli
