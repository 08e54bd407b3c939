#pragma once

#include "semishell/types.hpp"

#include <optional>
#include <string>

namespace semishell {

// On-disk problem: a single UTF-8 JSON document with top-level keys
// "n", "A", "T" and optionally "S"; each matrix is an n x n array of
// [re, im] pairs. Parsing rejects ragged rows, wrong sizes and non-finite
// entries with a ParseError.
struct Problem {
  int n = 0;
  ComplexMatrix A;
  ComplexMatrix T;
  std::optional<ComplexMatrix> S;
};

Problem load_problem(const std::string& path);
Problem parse_problem(const std::string& json_text);

// Canonical serialization: re-parsing reproduces bit-identical matrices.
std::string problem_to_json(const Problem& problem);
void dump_problem(const Problem& problem, const std::string& path);

}  // namespace semishell
