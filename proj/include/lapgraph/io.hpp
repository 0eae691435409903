#pragma once

#include <string>
#include <utility>

#include "lapgraph/genpoly.hpp"
#include "lapgraph/graph.hpp"
#include "lapgraph/matrix.hpp"
#include "lapgraph/obstacle.hpp"
#include "lapgraph/polynomial.hpp"
#include "lapgraph/spectrum.hpp"

// Interchange formats. All vertex indices are 1-based on the wire; exact
// values travel as strings ("3/2"), never floats. Writers are canonical:
// identical values serialize to identical bytes.
namespace lapgraph::io {

std::string mode_to_string(SolveMode mode);
SolveMode mode_from_string(const std::string& text);

// Edge-list text: header "n <edge count>", then one "i j" line per edge.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(const std::string& text);

// {"n": int, "edges": [[i, j], ...]}
std::string write_graph_json(const Graph& g);
Graph read_graph_json(const std::string& text);

// Accepts either representation, sniffing for JSON.
Graph read_graph_auto(const std::string& text);

// "rows cols" header, then whitespace-separated exact fractions.
std::string write_matrix_text(const ExactMatrix& m);
ExactMatrix read_matrix_text(const std::string& text);

// Space-separated integer coefficients, constant term first.
std::string write_polynomial_text(const UniPolynomial& p);
UniPolynomial read_polynomial_text(const std::string& text);

// Terms in serialization order: (degree, lexicographic vars), 0-based.
std::vector<std::pair<std::vector<int>, Integer>> canonical_terms(const MultilinearPolynomial& mp);

// {"n": int, "terms": [{"vars": [...], "coeff": "..."}]} sorted by
// (degree, lexicographic vars).
std::string write_genpoly_json(const MultilinearPolynomial& mp);
MultilinearPolynomial read_genpoly_json(const std::string& text);

// {"graph": ..., "zero_set": [...], "mode": "..."}
std::string write_problem_json(const ObstacleProblem& p, SolveMode mode);
std::pair<ObstacleProblem, SolveMode> read_problem_json(const std::string& text);

std::string write_solution_json(const ObstacleSolution& s);
ObstacleSolution read_solution_json(const std::string& text);

}  // namespace lapgraph::io
