#include "semishell/problem_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace semishell {

namespace {

using nlohmann::json;

ComplexMatrix parse_matrix(const json& j, int n, const std::string& name) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError("matrix \"" + name + "\" must be an array of " + std::to_string(n) +
                     " rows");
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError("matrix \"" + name + "\" row " + std::to_string(i) +
                       " must have " + std::to_string(n) + " entries");
    for (int k = 0; k < n; ++k) {
      const json& e = row[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw ParseError("matrix \"" + name + "\" entry (" + std::to_string(i) + "," +
                         std::to_string(k) + ") must be a [re, im] pair");
      const double re = e[0].get<double>();
      const double im = e[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im))
        throw ParseError("matrix \"" + name + "\" has a non-finite entry");
      m(i, k) = Complex(re, im);
    }
  }
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Problem parse_problem(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("problem file must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("missing integer key \"n\"");
  const int n = j["n"].get<int>();
  if (n < 1) throw ParseError("\"n\" must be >= 1");
  if (!j.contains("A") || !j.contains("T"))
    throw ParseError("problem file requires matrices \"A\" and \"T\"");

  Problem p;
  p.n = n;
  p.A = parse_matrix(j["A"], n, "A");
  p.T = parse_matrix(j["T"], n, "T");
  if (j.contains("S") && !j["S"].is_null()) p.S = parse_matrix(j["S"], n, "S");
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string problem_to_json(const Problem& problem) {
  json j;
  j["n"] = problem.n;
  j["A"] = matrix_to_json(problem.A);
  j["T"] = matrix_to_json(problem.T);
  if (problem.S) j["S"] = matrix_to_json(*problem.S);
  return j.dump(2) + "\n";
}

void dump_problem(const Problem& problem, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << problem_to_json(problem);
}

}  // namespace semishell
