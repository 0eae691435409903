#include "lapgraph/obstacle.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "lapgraph/linalg.hpp"

namespace lapgraph {

namespace {

std::vector<std::size_t> positive_vertices(const ObstacleProblem& p) {
  std::vector<std::size_t> keep;
  for (int v = 0; v < p.graph.vertex_count(); ++v) {
    if (!p.zero_set.contains(v)) keep.push_back(static_cast<std::size_t>(v));
  }
  return keep;
}

// Solves L[P,P] u_P = rhs_value * 1 and embeds zeros on the zero set.
ExactVector solve_positive_rows(const ObstacleProblem& p, const Rational& rhs_value) {
  const auto keep = positive_vertices(p);
  const ExactMatrix sub = principal_submatrix(laplacian(p.graph), keep);
  ExactVector rhs(keep.size(), rhs_value);
  const ExactVector positive = solve_linear(sub, std::move(rhs));
  for (const auto& value : positive) {
    if (value <= 0) throw std::logic_error("positive-row solve produced a nonpositive entry");
  }
  ExactVector u(p.graph.vertex_count(), Rational(0));
  for (std::size_t k = 0; k < keep.size(); ++k) u[keep[k]] = positive[k];
  return u;
}

}  // namespace

void validate_problem(const ObstacleProblem& p) {
  const int n = p.graph.vertex_count();
  for (int v : p.zero_set) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("zero-set vertex out of range: " + std::to_string(v + 1));
    }
  }
  if (p.zero_set.empty()) throw std::invalid_argument("zero set must be nonempty");
  if (static_cast<int>(p.zero_set.size()) == n) {
    throw std::invalid_argument("zero set must leave at least one positive vertex");
  }
  if (!is_connected(p.graph)) throw std::invalid_argument("graph must be connected");
}

ObstacleSolution solve_restricted(const ObstacleProblem& p) {
  validate_problem(p);
  ObstacleSolution s;
  s.mode = SolveMode::Restricted;
  s.u = solve_positive_rows(p, Rational(1));
  return s;
}

ObstacleSolution solve_slack(const ObstacleProblem& p) {
  ObstacleSolution s = solve_restricted(p);
  s.mode = SolveMode::Slack;
  const ExactVector lu = laplacian(p.graph) * *s.u;
  ExactVector b(s.u->size(), Rational(0));
  for (int i : p.zero_set) {
    b[i] = -lu[i];
    if (b[i] < 0) throw std::logic_error("slack entry came out negative");
  }
  s.slack = std::move(b);
  return s;
}

ObstacleSolution solve_constant_shift(const ObstacleProblem& p) {
  validate_problem(p);
  const int n = p.graph.vertex_count();
  const int j = static_cast<int>(p.zero_set.size());

  ObstacleSolution s;
  s.mode = SolveMode::ConstantShift;
  Rational shift(n - j, n);
  shift.canonicalize();
  s.shift = std::move(shift);

  ExactVector u = solve_positive_rows(p, Rational(1) - *s.shift);

  // Zero rows demand sum of neighbor values = b, exactly.
  for (int i : p.zero_set) {
    Rational neighbor_sum = 0;
    for (int w : p.graph.neighbors(i)) neighbor_sum += u[w];
    if (neighbor_sum != *s.shift) {
      s.consistent = false;
      return s;
    }
  }
  s.u = std::move(u);
  return s;
}

ObstacleSolution solve(const ObstacleProblem& p, SolveMode mode) {
  switch (mode) {
    case SolveMode::Restricted: return solve_restricted(p);
    case SolveMode::Slack: return solve_slack(p);
    case SolveMode::ConstantShift: return solve_constant_shift(p);
  }
  throw std::logic_error("unreachable solve mode");
}

VerifyReport verify_solution(const ObstacleProblem& p, const ObstacleSolution& s) {
  validate_problem(p);
  if (!s.u) throw std::invalid_argument("solution carries no u vector to verify");
  const std::size_t n = static_cast<std::size_t>(p.graph.vertex_count());
  if (s.u->size() != n) throw std::invalid_argument("solution length does not match the graph");
  if (s.mode == SolveMode::Slack && (!s.slack || s.slack->size() != n)) {
    throw std::invalid_argument("slack solution carries no b vector of matching length");
  }
  if (s.mode == SolveMode::ConstantShift && !s.shift) {
    throw std::invalid_argument("constant-shift solution carries no scalar b");
  }

  VerifyReport report;
  const auto flag = [&](int row, Rational lhs, Rational expected) {
    report.ok = false;
    report.violations.push_back({row, std::move(lhs), std::move(expected)});
  };

  const ExactVector lu = laplacian(p.graph) * *s.u;
  for (int i = 0; i < static_cast<int>(n); ++i) {
    const bool zero_row = p.zero_set.contains(i);
    switch (s.mode) {
      case SolveMode::Restricted:
        if (!zero_row && lu[i] != 1) flag(i, lu[i], Rational(1));
        break;
      case SolveMode::Slack: {
        const Rational lhs = lu[i] + (*s.slack)[i];
        const Rational expected = zero_row ? Rational(0) : Rational(1);
        if (lhs != expected) flag(i, lhs, expected);
        if ((*s.slack)[i] < 0) flag(i, (*s.slack)[i], Rational(0));
        break;
      }
      case SolveMode::ConstantShift: {
        const Rational lhs = lu[i] + *s.shift;
        const Rational expected = zero_row ? Rational(0) : Rational(1);
        if (lhs != expected) flag(i, lhs, expected);
        break;
      }
    }
  }
  return report;
}

}  // namespace lapgraph
