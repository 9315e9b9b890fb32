#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"
#include "polya/cli/commands.hpp"
#include "polya/cli/grid.hpp"
#include "polya/cli/report.hpp"
#include "polya/cli/verify_suite.hpp"

using namespace polya::cli;
namespace fs = std::filesystem;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::string f;
    std::istringstream ls(line);
    while (std::getline(ls, f, ',')) fields.push_back(f);
    rows.push_back(fields);
  }
  return rows;
}

std::string run_to_string(const RunConfig& c, int expected_exit = kExitOk) {
  std::ostringstream out;
  CHECK(run(c, out) == expected_exit);
  return out.str();
}

int shell(const std::string& args) {
  const std::string cmd = std::string(POLYA_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir() {
  auto d = fs::temp_directory_path() / ("polya_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("format_real") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(-1.0 / 3.0) == "-0.33333333333333331");
  CHECK(format_real(1e-5) == "1.0000000000000001e-05");
  CHECK(format_real(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_real(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("CSV quoting and JSON mirror") {
  Table t({"name", "value", "flag", "count"});
  t.add_row({std::string("plain"), 0.5, true, std::int64_t{3}});
  t.add_row({std::string("a,b \"q\""), std::numeric_limits<double>::quiet_NaN(), false, std::int64_t{-1}});
  CHECK_THROWS(t.add_row({std::string("short")}));

  std::ostringstream csv;
  write_csv(t, csv);
  CHECK(csv.str() == "name,value,flag,count\nplain,0.5,true,3\n\"a,b \"\"q\"\"\",nan,false,-1\n");

  std::ostringstream js;
  write_json(t, "demo", js);
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j["command"] == "demo");
  CHECK(j["columns"] == nlohmann::json({"name", "value", "flag", "count"}));
  CHECK(j["rows"][0]["value"] == 0.5);
  CHECK(j["rows"][0]["flag"] == true);
  CHECK(j["rows"][1]["name"] == "a,b \"q\"");
  CHECK(j["rows"][1]["value"] == "nan");
  CHECK(j["rows"][1]["count"] == -1);
}

TEST_CASE("checked-in grid") {
  const auto grid = load_grid(POLYA_DEFAULT_GRID);
  CHECK(grid.version == 1);
  const auto points = grid.points();
  CHECK(points.size() >= 100);
  CHECK(std::any_of(points.begin(), points.end(), [](const auto& p) { return p.M() == 100; }));
  CHECK_THROWS_AS(parse_grid("{\"version\": 1}"), UsageError);
  CHECK_THROWS_AS(parse_grid("not json"), UsageError);
  CHECK_THROWS_AS(load_grid("/nonexistent/grid.json"), IoError);
}

TEST_CASE("qline row at the zero crossing") {
  RunConfig c;
  c.command = Command::qline;
  c.M = {5};
  c.gamma = 0.5;
  const auto rows = parse_csv(run_to_string(c));
  REQUIRE(rows.size() == 1 + 101 + 1);
  CHECK(rows[0] == std::vector<std::string>{"eta", "q_factor", "zero_crossing"});
  int flagged = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][2] != "true") continue;
    ++flagged;
    CHECK(std::abs(std::stod(rows[i][0]) - 4.0 / 7.0) <= 1e-12);
    CHECK(std::abs(std::stod(rows[i][1])) <= 1e-12);
  }
  CHECK(flagged == 1);
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(std::stod(rows[i][0]) > std::stod(rows[i - 1][0]));
}

TEST_CASE("moments at eta = 1 give Q = -1") {
  for (int M : {1, 3, 20}) {
    for (double g : {0.0, 0.4, 7.0}) {
      RunConfig c;
      c.command = Command::moments;
      c.M = {M};
      c.gamma = g;
      c.eta = 1.0;
      const auto rows = parse_csv(run_to_string(c));
      REQUIRE(rows.size() == 5);
      CHECK(rows[4][0] == "q_factor");
      CHECK(std::stod(rows[4][1]) == -1.0);
      CHECK(std::stod(rows[4][2]) == -1.0);
    }
  }
}

TEST_CASE("pmf, state, limits and urn tables") {
  RunConfig c;
  c.command = Command::pmf;
  c.M = {3};
  c.gamma = 0.5;
  c.eta = 0.5;
  auto rows = parse_csv(run_to_string(c));
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][1]) == doctest::Approx(0.25));

  c.command = Command::state;
  c.k = 4;
  rows = parse_csv(run_to_string(c));
  REQUIRE(rows.size() == 2);
  CHECK(std::stod(rows[1][3]) == 0.0);

  RunConfig l;
  l.command = Command::limits;
  l.kind = "nbs";
  l.lambda = 1.0;
  l.rho = 2.0;
  rows = parse_csv(run_to_string(l));
  REQUIRE(rows.size() == 5);
  CHECK(rows[4][1] == "10000");
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(std::stod(rows[i][4]) < std::stod(rows[i - 1][4]));

  RunConfig u;
  u.command = Command::urn;
  u.M = {3};
  u.gamma = 1.0;
  u.eta = 0.5;
  u.seed = 11;
  const auto first = run_to_string(u);
  CHECK(first == run_to_string(u));
  rows = parse_csv(first);
  REQUIRE(rows.size() == 5);
  CHECK(std::stod(rows[1][4]) <= 0.01);
}

TEST_CASE("squeeze writes one file per M") {
  const auto dir = scratch_dir();
  RunConfig c;
  c.command = Command::squeeze;
  c.points = 5;
  c.out = (dir / "sq.csv").string();
  run_to_string(c);
  CHECK(fs::exists(dir / "sq_M5.csv"));
  CHECK(fs::exists(dir / "sq_M20.csv"));
  CHECK(parse_csv(slurp(dir / "sq_M20.csv")).size() == 1 + 25);

  c.M = {7};
  c.out = (dir / "one.json").string();
  c.format = Format::json;
  run_to_string(c);
  const auto j = nlohmann::json::parse(slurp(dir / "one.json"));
  CHECK(j["rows"].size() == 25);
  CHECK(j["rows"][0]["M"] == 7);
  fs::remove_all(dir);
}

TEST_CASE("validation") {
  RunConfig c;
  c.command = Command::pmf;
  c.M = {3};
  c.gamma = 0.5;
  CHECK_THROWS_AS(validate(c), UsageError);
  c.eta = 0.5;
  validate(c);
  c.seed = 3;
  CHECK_THROWS_AS(validate(c), UsageError);
  c.seed.reset();
  c.M = {3, 4};
  CHECK_THROWS_AS(validate(c), UsageError);

  RunConfig l;
  l.command = Command::limits;
  CHECK_THROWS_AS(validate(l), UsageError);
  l.kind = "other";
  CHECK_THROWS_AS(validate(l), UsageError);
  l.kind = "bs";
  l.lambda = 1.0;
  l.M = {5};
  l.eta = 0.3;
  CHECK_THROWS_AS(validate(l), UsageError);

  std::ostringstream out;
  std::ostringstream err;
  c.M = {3};
  c.eta = 1.5;
  CHECK(run_guarded(c, out, err) == kExitUsage);
  c.eta = 0.5;
  c.out = "/nonexistent/dir/out.csv";
  CHECK(run_guarded(c, out, err) == kExitIo);
}

TEST_CASE("verify on the standard grid") {
  RunConfig c;
  c.command = Command::verify;
  c.grid = POLYA_DEFAULT_GRID;
  const auto first = run_to_string(c);
  CHECK(first == run_to_string(c));
  const auto rows = parse_csv(first);
  REQUIRE(rows.size() > 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CAPTURE(rows[i][0]);
    CHECK(rows[i].back() == "true");
  }
  for (const auto& r : run_verify_suite(load_grid(POLYA_DEFAULT_GRID))) CHECK(r.cases > 0);
}

TEST_CASE("executable exit codes") {
  const auto dir = scratch_dir();
  CHECK(shell("verify") == kExitOk);
  CHECK(shell("verify --out " + (dir / "a.csv").string()) == kExitOk);
  CHECK(shell("verify --out " + (dir / "b.csv").string()) == kExitOk);
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  CHECK(shell("pmf --M 3 --gamma 0.1") == kExitUsage);
  CHECK(shell("pmf --M three --gamma 0.1 --eta 0.2") == kExitUsage);
  CHECK(shell("pmf --M 3 --gamma 0.1 --eta 0.2 --bogus 1") == kExitUsage);
  CHECK(shell("moments --M 3 --gamma 0.1 --eta 0.2 --format xml") == kExitUsage);
  CHECK(shell("nosuchcommand") == kExitUsage);
  CHECK(shell("pmf --M 3 --gamma 0.1 --eta 0.2 --out /nonexistent/dir/x.csv") == kExitIo);
  CHECK(shell("verify --grid /nonexistent/grid.json") == kExitIo);
  CHECK(shell("--help") == kExitOk);
  fs::remove_all(dir);
}
