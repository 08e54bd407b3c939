#include "semishell/cli.hpp"
#include "semishell/problem_io.hpp"
#include "semishell/rng.hpp"
#include "test_helpers.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace semishell;
using namespace semishell::testing;
using nlohmann::json;

namespace {

std::string scratch_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "semishell_tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string write_problem(const std::string& name, const Problem& p) {
  const std::string path = scratch_path(name);
  dump_problem(p, path);
  return path;
}

Problem jordan_problem() {
  Problem p;
  p.n = 2;
  p.A = ComplexMatrix::Identity(2, 2);
  p.T = jordan2();
  p.S = ComplexMatrix::Identity(2, 2);
  return p;
}

Problem unbounded_problem() {
  Problem p;
  p.n = 3;
  p.A = diag({1, 0, 0});
  p.T = perm_example();
  return p;
}

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("problem parsing accepts the documented format") {
  const std::string text = R"({
    "n": 2,
    "A": [[[1,0],[0,0]],[[0,0],[2,0]]],
    "T": [[[0,0],[1,0]],[[0,0],[0,0]]]
  })";
  const Problem p = parse_problem(text);
  CHECK(p.n == 2);
  CHECK(p.A(1, 1) == Complex(2, 0));
  CHECK(p.T(0, 1) == Complex(1, 0));
  CHECK_FALSE(p.S.has_value());
}

TEST_CASE("problem parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_problem("not json"), ParseError);
  CHECK_THROWS_AS(parse_problem("[]"), ParseError);
  CHECK_THROWS_AS(parse_problem(R"({"n": 2, "A": [], "T": []})"), ParseError);
  // ragged row
  CHECK_THROWS_AS(parse_problem(R"({"n": 2,
    "A": [[[1,0],[0,0]],[[0,0]]],
    "T": [[[0,0],[1,0]],[[0,0],[0,0]]]})"),
                  ParseError);
  // entry is not a [re, im] pair
  CHECK_THROWS_AS(parse_problem(R"({"n": 1, "A": [[1]], "T": [[[0,0]]]})"), ParseError);
  CHECK_THROWS_AS(parse_problem(R"({"n": 0, "A": [], "T": []})"), ParseError);
  CHECK_THROWS_AS(load_problem("/nonexistent/file.json"), ParseError);
}

TEST_CASE("canonical serialization round-trips bit-identically") {
  Rng rng(601);
  Problem p;
  p.n = 4;
  p.A = rng.cgaussian_mat(4, 4);
  p.A = (p.A.adjoint() * p.A).eval();
  p.T = rng.cgaussian_mat(4, 4);
  p.S = rng.cgaussian_mat(4, 4);
  const Problem q = parse_problem(problem_to_json(p));
  CHECK(q.n == p.n);
  CHECK(max_abs(q.A - p.A) == 0.0);
  CHECK(max_abs(q.T - p.T) == 0.0);
  REQUIRE(q.S.has_value());
  CHECK(max_abs(*q.S - *p.S) == 0.0);
  // And the canonical text itself is a fixed point.
  CHECK(problem_to_json(q) == problem_to_json(p));
}

TEST_CASE("analyze reports the Jordan block invariants") {
  const std::string path = write_problem("jordan.json", jordan_problem());
  const CliResult res = run_cli({"analyze", path});
  REQUIRE(res.code == 0);
  const json j = json::parse(res.out);
  CHECK(j["omegaA"].get<double>() == doctest::Approx(0.5));
  CHECK(j["opnormA"].get<double>() == doctest::Approx(1.0));
  CHECK(j["rA"].get<double>() == doctest::Approx(0.0));
  CHECK(j["classify"]["aNormaloid"].get<bool>() == false);
  CHECK(j["seed"].get<std::uint64_t>() == 42);
}

TEST_CASE("analyze serializes infinities as the string sentinel") {
  const std::string path = write_problem("unbounded.json", unbounded_problem());
  const CliResult res = run_cli({"analyze", path});
  REQUIRE(res.code == 0);
  const json j = json::parse(res.out);
  CHECK(j["opnormA"] == "inf");
  CHECK(j["omegaA"] == "inf");
  CHECK(j["domegaA"] == "inf");
  CHECK(j["classify"]["aBounded"] == false);
}

TEST_CASE("check emits the classification report") {
  const std::string path = write_problem("jordan2.json", jordan_problem());
  const CliResult res = run_cli({"check", path});
  REQUIRE(res.code == 0);
  const json j = json::parse(res.out);
  CHECK(j.contains("classify"));
  CHECK(j["classify"]["aBounded"] == true);
  CHECK(j["invariants"]["omegaA"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("shell writes the CSV schema and a summary") {
  const std::string path = write_problem("unbounded2.json", unbounded_problem());
  const std::string csv = scratch_path("points.csv");
  const CliResult res = run_cli({"shell", path, "--mode", "ambient", "--count", "64",
                                 "--null-scale", "2", "--seed", "9", "--out", csv});
  REQUIRE(res.code == 0);
  const json j = json::parse(res.out);
  CHECK(j["count"] == 64);
  CHECK(j["opnormA"] == "inf");
  CHECK(j["lambdaViolations"] == 0);

  std::ifstream in(csv);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "re_lambda,im_lambda,mu");
  int rows = 0;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 64);
}

TEST_CASE("shell compressed mode on an unbounded operator exits with a diagnostic") {
  const std::string path = write_problem("unbounded3.json", unbounded_problem());
  const CliResult res = run_cli({"shell", path, "--mode", "compressed", "--count", "8",
                                 "--out", scratch_path("unused.csv")});
  CHECK(res.code == 2);
  CHECK(res.err.find("error:") != std::string::npos);
}

TEST_CASE("parallel produces a certificate and requires S") {
  const std::string path = write_problem("jordan3.json", jordan_problem());
  const CliResult res = run_cli({"parallel", path, "--relation", "seminorm"});
  REQUIRE(res.code == 0);
  const json j = json::parse(res.out);
  CHECK(j["verdict"] == false);
  CHECK(j["conclusive"] == true);
  CHECK(j["achieved"].get<double>() == doctest::Approx(0.5));
  CHECK(j["target"].get<double>() == doctest::Approx(1.0));
  CHECK(j["witness"].is_array());

  Problem no_s = jordan_problem();
  no_s.S.reset();
  const std::string path2 = write_problem("no_s.json", no_s);
  CHECK(run_cli({"parallel", path2, "--relation", "radius"}).code == 2);
}

TEST_CASE("identical invocations produce byte-identical reports") {
  const std::string path = write_problem("jordan4.json", jordan_problem());
  const CliResult a = run_cli({"analyze", path, "--seed", "7"});
  const CliResult b = run_cli({"analyze", path, "--seed", "7"});
  CHECK(a.out == b.out);
  const CliResult c = run_cli({"parallel", path, "--relation", "radius", "--seed", "3"});
  const CliResult d = run_cli({"parallel", path, "--relation", "radius", "--seed", "3"});
  CHECK(c.out == d.out);
}

TEST_CASE("dump-canonical re-parses to bit-identical matrices") {
  Rng rng(607);
  Problem p;
  p.n = 3;
  ComplexMatrix g = rng.cgaussian_mat(3, 3);
  p.A = (g.adjoint() * g).eval();
  p.T = rng.cgaussian_mat(3, 3);
  const std::string path = write_problem("dump_src.json", p);
  const std::string dumped = scratch_path("dump_out.json");
  const CliResult res = run_cli({"check", path, "--dump-canonical", dumped});
  REQUIRE(res.code == 0);
  const Problem q = load_problem(dumped);
  CHECK(max_abs(q.A - p.A) == 0.0);
  CHECK(max_abs(q.T - p.T) == 0.0);
}

TEST_CASE("exit codes: parse failures give 2, verification failures give 1") {
  CHECK(run_cli({"analyze", "/nonexistent.json"}).code == 2);
  const std::string bad = scratch_path("bad.json");
  std::ofstream(bad) << "{ not json";
  CHECK(run_cli({"analyze", bad}).code == 2);
  CHECK(run_cli({"bogus-subcommand"}).code == 2);
  CHECK(run_cli({"verify", "--dims", "oops"}).code == 2);
  // A healthy build passes a small battery.
  const CliResult ok = run_cli({"verify", "--dims", "2..3", "--instances", "4", "--seed", "3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
}

TEST_CASE("help exits zero") {
  CHECK(run_cli({"--help"}).code == 0);
}
