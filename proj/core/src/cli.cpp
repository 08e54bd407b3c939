#include "semishell/cli.hpp"

#include "semishell/parallel.hpp"
#include "semishell/problem_io.hpp"
#include "semishell/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace semishell {

namespace {

using nlohmann::json;

json scalar(double v) {
  if (std::isinf(v)) return json(v > 0 ? "inf" : "-inf");
  return json(v);
}

json complex_pair(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_json(const ComplexVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_pair(v(i)));
  return a;
}

json flags_json(const ClassReport& r) {
  return json{{"aBounded", r.aBounded},
              {"aAdjointable", r.aAdjointable},
              {"aSelfAdjoint", r.aSelfAdjoint},
              {"aNormal", r.aNormal},
              {"aHyponormal", r.aHyponormal},
              {"aUnitary", r.aUnitary},
              {"aNormaloid", r.aNormaloid},
              {"boundednessMarginal", r.boundednessMarginal},
              {"adjointabilityMarginal", r.adjointabilityMarginal}};
}

json scalars_json(const ClassReport& r) {
  return json{{"opnormA", scalar(r.opnormA)},
              {"omegaA", scalar(r.omegaA)},
              {"rA", scalar(r.rA)},
              {"domegaA", scalar(r.domegaA)}};
}

json probe_json(const ConvexityProbe& p) {
  return json{{"targetLambda", complex_pair(p.target_lambda)},
              {"targetMu", p.target_mu},
              {"distance", p.distance},
              {"pass", p.pass}};
}

struct CommonArgs {
  std::string file;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  std::string dump_canonical;
};

Problem load_and_maybe_dump(const CommonArgs& c) {
  Problem p = load_problem(c.file);
  if (!c.dump_canonical.empty()) dump_problem(p, c.dump_canonical);
  return p;
}

void add_common(CLI::App* sub, CommonArgs& c, double default_tol) {
  c.tol = default_tol;
  sub->add_option("file", c.file, "problem JSON file")->required();
  sub->add_option("--tol", c.tol, "tolerance");
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("--dump-canonical", c.dump_canonical,
                  "re-emit the parsed problem in canonical form to this path");
}

int run_analyze(const CommonArgs& c, std::ostream& out) {
  const Problem p = load_and_maybe_dump(c);
  const PositiveContext ctx = build_context(p.A);
  const ClassReport rep = classify(ctx, p.T, c.tol, c.seed);
  json j = scalars_json(rep);
  j["n"] = p.n;
  j["seed"] = c.seed;
  j["tol"] = c.tol;
  j["classify"] = flags_json(rep);
  out << j.dump(2) << "\n";
  return 0;
}

int run_check(const CommonArgs& c, std::ostream& out) {
  const Problem p = load_and_maybe_dump(c);
  const PositiveContext ctx = build_context(p.A);
  const ClassReport rep = classify(ctx, p.T, c.tol, c.seed);
  json j;
  j["n"] = p.n;
  j["seed"] = c.seed;
  j["tol"] = c.tol;
  j["classify"] = flags_json(rep);
  j["invariants"] = scalars_json(rep);
  out << j.dump(2) << "\n";
  return 0;
}

int run_shell(const CommonArgs& c, const std::string& mode_name, int count,
              double null_scale, const std::string& csv_path,
              const std::vector<double>& probe, std::ostream& out) {
  const Problem p = load_and_maybe_dump(c);
  const PositiveContext ctx = build_context(p.A);
  ShellMode mode;
  if (mode_name == "ambient") mode = ShellMode::Ambient;
  else if (mode_name == "compressed") mode = ShellMode::Compressed;
  else throw ParseError("--mode must be ambient or compressed");

  const ShellCloud cloud = shell_sample(ctx, p.T, mode, count, c.seed, null_scale);

  std::ofstream csv(csv_path);
  if (!csv) throw ParseError("cannot write file: " + csv_path);
  csv << "re_lambda,im_lambda,mu\n";
  char row[128];
  for (const ShellPoint& pt : cloud.points) {
    std::snprintf(row, sizeof(row), "%.17g,%.17g,%.17g\n", pt.lambda.real(),
                  pt.lambda.imag(), pt.mu);
    csv << row;
  }
  csv.close();

  std::vector<std::pair<Complex, double>> targets;
  if (!probe.empty()) targets.emplace_back(Complex(probe[0], probe[1]), probe[2]);
  const ShellSummary sum = shell_summary(cloud, ctx, p.T, targets);

  json j{{"mode", mode_name},
         {"count", cloud.count},
         {"seed", cloud.seed},
         {"nullScale", cloud.null_scale},
         {"opnormA", scalar(sum.opnorm)},
         {"maxAbsLambda", sum.max_abs_lambda},
         {"maxMu", sum.max_mu},
         {"lambdaViolations", sum.lambda_violations},
         {"muViolations", sum.mu_violations},
         {"out", csv_path}};
  json probes = json::array();
  for (const ConvexityProbe& pr : sum.probes) probes.push_back(probe_json(pr));
  j["convexityProbes"] = probes;
  out << j.dump(2) << "\n";
  return 0;
}

int run_parallel(const CommonArgs& c, const std::string& relation, std::ostream& out) {
  const Problem p = load_and_maybe_dump(c);
  if (!p.S) throw ParseError("parallel requires an \"S\" matrix in the problem file");
  const PositiveContext ctx = build_context(p.A);

  ParallelCertificate cert;
  if (relation == "seminorm")
    cert = seminorm_parallel(ctx, p.T, *p.S, c.tol, c.seed);
  else if (relation == "radius")
    cert = radius_parallel(ctx, p.T, *p.S, c.tol, c.seed);
  else
    throw ParseError("--relation must be seminorm or radius");

  json j{{"relation", relation},
         {"verdict", cert.verdict},
         {"conclusive", cert.conclusive},
         {"lambdaHat", complex_pair(cert.lambdaHat)},
         {"achieved", cert.achieved},
         {"target", cert.target},
         {"gap", cert.gap},
         {"seed", c.seed},
         {"tol", c.tol},
         {"flags", json{{"multimodal", cert.multimodal}, {"inconclusive", !cert.conclusive}}}};
  j["witness"] = cert.witness ? vector_json(*cert.witness) : json(nullptr);
  if (relation == "radius") {
    j["witnessOmegaT"] = cert.witnessOmegaT;
    j["witnessOmegaS"] = cert.witnessOmegaS;
  }
  out << j.dump(2) << "\n";
  return 0;
}

int run_verify_cmd(const std::string& dims, int instances, std::uint64_t seed,
                   std::ostream& out) {
  VerifyOptions opt;
  opt.instances = instances;
  opt.seed = seed;
  int lo = 0, hi = 0;
  if (std::sscanf(dims.c_str(), "%d..%d", &lo, &hi) == 2) {
    opt.dim_lo = lo;
    opt.dim_hi = hi;
  } else if (std::sscanf(dims.c_str(), "%d", &lo) == 1) {
    opt.dim_lo = opt.dim_hi = lo;
  } else {
    throw ParseError("--dims expects LO..HI or a single dimension");
  }
  if (opt.dim_lo < 1 || opt.dim_hi < opt.dim_lo)
    throw ParseError("--dims range is invalid");

  const auto results = run_verify(opt);
  int failed = 0;
  char line[160];
  for (const CheckResult& r : results) {
    if (!r.pass()) ++failed;
    std::snprintf(line, sizeof(line), "%s %-24s trials=%-5d failures=%-4d worst=%.3g",
                  r.pass() ? "PASS" : "FAIL", r.key.c_str(), r.trials, r.failures,
                  r.worst);
    out << line;
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << "\n";
  }
  std::snprintf(line, sizeof(line),
                "verify: %zu/%zu checks passed (dims=%d..%d, instances=%d, seed=%" PRIu64 ")",
                results.size() - failed, results.size(), opt.dim_lo, opt.dim_hi,
                opt.instances, seed);
  out << line << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"semi-inner-product operator analysis"};
  app.require_subcommand(1);

  CommonArgs analyze_args, check_args, shell_args, parallel_args;

  CLI::App* analyze = app.add_subcommand("analyze", "full invariant + classification report");
  add_common(analyze, analyze_args, 1e-9);

  CLI::App* check = app.add_subcommand("check", "classification report only");
  add_common(check, check_args, 1e-9);

  CLI::App* shell = app.add_subcommand("shell", "sample the shell to CSV and summarize");
  add_common(shell, shell_args, 1e-9);
  std::string mode = "ambient";
  int count = 1000;
  double null_scale = 1.0;
  std::string csv_path;
  std::vector<double> probe;
  shell->add_option("--mode", mode, "ambient|compressed")->required();
  shell->add_option("--count", count, "number of sample points")->required();
  shell->add_option("--null-scale", null_scale, "null-direction scale (ambient mode)");
  shell->add_option("--out", csv_path, "CSV output path")->required();
  shell->add_option("--probe", probe, "convexity probe target: re im mu")->expected(3);

  CLI::App* parallel = app.add_subcommand("parallel", "parallelism certificate for (T, S)");
  add_common(parallel, parallel_args, 1e-7);
  std::string relation;
  parallel->add_option("--relation", relation, "seminorm|radius")->required();

  CLI::App* verify = app.add_subcommand("verify", "randomized theorem-verification battery");
  std::string dims = "2..6";
  int instances = 200;
  std::uint64_t vseed = 42;
  verify->add_option("--dims", dims, "dimension range LO..HI");
  verify->add_option("--instances", instances, "number of random instances");
  verify->add_option("--seed", vseed, "random seed");

  std::vector<const char*> argv;
  argv.push_back("semishell");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_args, out);
    if (check->parsed()) return run_check(check_args, out);
    if (shell->parsed())
      return run_shell(shell_args, mode, count, null_scale, csv_path, probe, out);
    if (parallel->parsed()) return run_parallel(parallel_args, relation, out);
    if (verify->parsed()) return run_verify_cmd(dims, instances, vseed, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace semishell
