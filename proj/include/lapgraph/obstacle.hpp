#pragma once

#include <optional>
#include <set>
#include <vector>

#include "lapgraph/graph.hpp"
#include "lapgraph/matrix.hpp"

namespace lapgraph {

enum class SolveMode { Restricted, Slack, ConstantShift };

// A connected graph plus a nonempty proper subset of vertices preassigned
// u = 0 (the free boundary).
struct ObstacleProblem {
  Graph graph;
  std::set<int> zero_set;  // 0-based
};

// Throws std::invalid_argument when the problem violates its invariants.
void validate_problem(const ObstacleProblem& p);

struct ObstacleSolution {
  SolveMode mode = SolveMode::Restricted;
  std::optional<ExactVector> u;       // absent when ConstantShift is inconsistent
  std::optional<ExactVector> slack;   // Slack mode: b, supported on the zero set
  std::optional<Rational> shift;      // ConstantShift mode: the scalar b
  bool consistent = true;             // ConstantShift verdict; true otherwise
};

// Drops the equations indexed by the zero set and solves L[P,P] u_P = 1
// on the positive vertices. The solution is unique and strictly positive.
ObstacleSolution solve_restricted(const ObstacleProblem& p);

// Restricted solution plus the slack vector b with b_i = -(L u)_i on the
// zero set, making L u + b = chi_{u>0} hold in every row.
ObstacleSolution solve_slack(const ObstacleProblem& p);

// L u + b 1 = chi_{u>0} with the scalar b = (n-j)/n forced by summing all
// equations. Solves the positive rows, then checks each zero row exactly;
// no solution exists unless the zeros sit symmetrically enough.
ObstacleSolution solve_constant_shift(const ObstacleProblem& p);

ObstacleSolution solve(const ObstacleProblem& p, SolveMode mode);

struct VerifyReport {
  struct Violation {
    int row = 0;  // 0-based vertex index
    Rational lhs;
    Rational expected;
  };
  bool ok = true;
  std::vector<Violation> violations;
};

// Re-evaluates the defining equations of the solution's mode row by row.
VerifyReport verify_solution(const ObstacleProblem& p, const ObstacleSolution& s);

}  // namespace lapgraph
