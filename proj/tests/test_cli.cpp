#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_runner.hpp"
#include "kstruve/struve.hpp"

using cli_test::run;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("eval prints a CSV record") {
  const auto r = run("eval --nu 0 --k 1 --c 1 --x 1");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "x,value,err_estimate,terms");
  const auto f = fields_of(lines[1]);
  REQUIRE(f.size() == 4);
  CHECK(std::abs(std::strtod(f[1].c_str(), nullptr) - 0.5686566) <= 1e-6);
}

TEST_CASE("eval JSON matches CSV") {
  const auto csv = run("eval --nu 0.3 --k 1.7 --c -0.4 --x 2.25");
  const auto js = run("eval --nu 0.3 --k 1.7 --c -0.4 --x 2.25 --json");
  REQUIRE(csv.exit_code == 0);
  REQUIRE(js.exit_code == 0);
  const auto f = fields_of(lines_of(csv.out)[1]);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(same_bits(j["x"].get<double>(), std::strtod(f[0].c_str(), nullptr)));
  CHECK(same_bits(j["value"].get<double>(), std::strtod(f[1].c_str(), nullptr)));
  CHECK(same_bits(j["err_estimate"].get<double>(), std::strtod(f[2].c_str(), nullptr)));
  CHECK(j["terms"].get<int>() == std::stoi(f[3]));
  // Same text for the numbers, too.
  CHECK(js.out.find("\"value\":" + f[1] + ",") != std::string::npos);
}

TEST_CASE("eval at the origin") {
  const auto r = run("eval --nu 1 --k 2 --c -1 --x 0 --json");
  REQUIRE(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["value"].get<double>() == 0.0);
}

TEST_CASE("eval variants") {
  const auto mod = run("eval --nu 0 --k 1 --x 1 --variant modified --json");
  REQUIRE(mod.exit_code == 0);
  CHECK(nlohmann::json::parse(mod.out)["value"].get<double>() == doctest::Approx(0.71024318593789089));
  const auto norm = run("eval --nu 0 --k 1 --x -1 --variant normalized --json");
  REQUIRE(norm.exit_code == 0);
  CHECK(nlohmann::json::parse(norm.out)["value"].get<double>() == doctest::Approx(-0.62943663499750858));
  CHECK(run("eval --nu 0 --k 1 --x 1 --variant bessel").exit_code == 2);
  CHECK(run("eval --nu 0 --k 1 --x 1").exit_code == 2);
}

TEST_CASE("domain and usage errors exit 2") {
  const auto r = run("eval --nu -2 --k 1 --c 1 --x 1");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("nu > -3k/2") != std::string::npos);
  CHECK(run("eval --nu 0 --k 0 --c 1 --x 1").exit_code == 2);
  CHECK(run("eval --nu 0 --k 1 --c 1 --x -1").exit_code == 2);
  CHECK(run("eval --nu 0 --k 1 --c 1").exit_code == 2);
  CHECK(run("eval --nu zero --k 1 --c 1 --x 1").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("").exit_code == 2);
}

TEST_CASE("term cap warning") {
  const auto r = run("eval --nu 0 --k 1 --c 1 --x 10", "KSTRUVE_MAX_TERMS=3");
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("KSTRUVE_MAX_TERMS") != std::string::npos);
}

TEST_CASE("table rows and values") {
  const auto dir = cli_test::scratch_dir();
  const auto path = (dir / "h0.csv").string();
  REQUIRE(run("table --nu 0 --k 1 --c 1 --x-start 0 --x-end 2 --x-step 1 --out \"" + path + "\"").exit_code == 0);
  const auto lines = lines_of(cli_test::slurp(path));
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "x,value,err_estimate,terms");
  CHECK(fields_of(lines[1])[1] == "0");

  const auto half = (dir / "half.csv").string();
  REQUIRE(run("table --nu 0.5 --k 1 --c 1 --x-start 1 --x-end 1 --x-step 1 --out \"" + half + "\"").exit_code == 0);
  const auto rows = lines_of(cli_test::slurp(half));
  REQUIRE(rows.size() == 2);
  const double expected = std::sqrt(2.0 / std::numbers::pi) * (1.0 - std::cos(1.0));
  CHECK(std::strtod(fields_of(rows[1])[1].c_str(), nullptr) == doctest::Approx(expected).epsilon(1e-14));

  const auto tenths = run("table --nu 0 --k 1 --c 1 --x-start 0 --x-end 1 --x-step 0.1");
  CHECK(lines_of(tenths.out).size() == 12);
}

TEST_CASE("table round-trips bits and is deterministic") {
  const auto dir = cli_test::scratch_dir();
  const auto a = (dir / "a.csv").string();
  const auto b = (dir / "b.csv").string();
  const std::string args = "table --nu 0.75 --k 1.5 --c 1 --x-start 0 --x-end 20 --x-step 0.25 --out ";
  REQUIRE(run(args + "\"" + a + "\"", "OMP_NUM_THREADS=1").exit_code == 0);
  REQUIRE(run(args + "\"" + b + "\"", "OMP_NUM_THREADS=4").exit_code == 0);
  const std::string text = cli_test::slurp(a);
  CHECK(text == cli_test::slurp(b));
  CHECK(text.find('\r') == std::string::npos);

  const auto lines = lines_of(text);
  REQUIRE(lines.size() == 82);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = fields_of(lines[i]);
    const double x = std::strtod(f[0].c_str(), nullptr);
    const auto direct = kstruve::struve({0.75, 1.5, 1.0}, x);
    CHECK(same_bits(std::strtod(f[1].c_str(), nullptr), direct.value));
    CHECK(same_bits(std::strtod(f[2].c_str(), nullptr), direct.abs_error_estimate));
  }
}

TEST_CASE("table errors") {
  CHECK(run("table --nu 0 --k 1 --c 1 --x-start 0 --x-end 1 --x-step 0").exit_code == 2);
  CHECK(run("table --nu 0 --k 1 --c 1 --x-start 2 --x-end 1 --x-step 0.5").exit_code == 2);
  CHECK(run("table --nu 0 --k 1 --c 1 --x-start -1 --x-end 1 --x-step 0.5").exit_code == 2);
  CHECK(run("table --nu 0 --k 1 --c 1 --x-start 0 --x-end 1 --x-step 0.5 --out /nonexistent-dir/t.csv").exit_code == 4);
}

TEST_CASE("verify exit codes and report") {
  const auto turan = run("verify --suite turan");
  CHECK(turan.exit_code == 0);
  const auto j = nlohmann::json::parse(turan.out);
  CHECK(j["suite"] == "turan");
  CHECK(j["passed"] == true);

  CHECK(run("verify --suite recurrence --tol 1e-9").exit_code == 0);

  const auto literal = run("verify --suite integral --paper-literal");
  CHECK(literal.exit_code == 1);
  const auto lj = nlohmann::json::parse(literal.out);
  CHECK(lj["passed"] == false);
  bool found = false;
  for (const auto& check : lj["checks"]) {
    const auto& w = check["witness"];
    if (check["worst_margin"].get<double>() >= 0.5 && w.contains("alpha") &&
        (w["k"].get<double>() != 1.0 || w["alpha"].get<double>() != 1.0)) {
      found = true;
    }
  }
  CHECK(found);

  CHECK(run("verify --suite nonsense").exit_code == 2);
  CHECK(run("verify").exit_code == 2);
  CHECK(run("verify --suite ode --tol -1").exit_code == 2);
  CHECK(run("verify --suite ode --out /nonexistent-dir/r.json").exit_code == 4);
}

TEST_CASE("verify output is independent of thread count") {
  const auto dir = cli_test::scratch_dir();
  const auto one = (dir / "v1.json").string();
  const auto four = (dir / "v4.json").string();
  REQUIRE(run("verify --suite monotonicity --threads 1 --out \"" + one + "\"").exit_code == 0);
  REQUIRE(run("verify --suite monotonicity --threads 4 --out \"" + four + "\"").exit_code == 0);
  CHECK(cli_test::slurp(one) == cli_test::slurp(four));
  const auto serial = run("verify --suite monotonicity --serial");
  CHECK(serial.out == cli_test::slurp(one));
}

TEST_CASE("show grid") {
  const auto r = run("verify --show-grid");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("identity"));
  CHECK(j["suite_order"].size() == 9);
}
