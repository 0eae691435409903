#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lapgraph/matrix.hpp"
#include "lapgraph/polynomial.hpp"

namespace lapgraph {

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError() : std::runtime_error("singular") {}
};

struct RrefResult {
  ExactMatrix matrix;
  std::size_t rank = 0;
};

// Unique reduced row echelon form over the rationals. Pivoting picks the
// first nonzero entry; exact arithmetic needs no magnitude pivoting.
RrefResult rref(const ExactMatrix& m);

// Fraction-free Bareiss condensation; every intermediate stays integral
// when the input is integer-valued. Every division below is exact.
Rational det_bareiss(ExactMatrix m);

// Unique solution of a square system; throws SingularMatrixError otherwise.
ExactVector solve_linear(ExactMatrix a, ExactVector b);

ExactMatrix inverse(const ExactMatrix& a);

// Rows and columns restricted to `keep` (strictly increasing indices).
ExactMatrix principal_submatrix(const ExactMatrix& m, const std::vector<std::size_t>& keep);

// The four hypotheses of the nonnegative-inverse lemma for weakly
// diagonally dominant matrices. `submatrix_condition` decides the
// every-principal-submatrix clause through the equivalent reachability
// criterion: in the digraph with an arc i -> j whenever m(i,j) != 0
// (i != j), every zero-row-sum row must reach a positive-row-sum row.
struct MMatrixReport {
  bool diag_positive = true;
  bool offdiag_nonpositive = true;
  bool rows_nonneg_sum = true;
  bool submatrix_condition = true;
  std::optional<std::vector<std::size_t>> witness;

  bool all_hold() const {
    return diag_positive && offdiag_nonpositive && rows_nonneg_sum && submatrix_condition;
  }
};

MMatrixReport mmatrix_check(const ExactMatrix& m);

// det(m - tI) via the Faddeev-LeVerrier trace recursion; the internal
// divisions by k are exact over the integers. Leading coefficient (-1)^n.
// Requires integer-valued entries.
UniPolynomial charpoly(const ExactMatrix& m);

// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
// ascending. Sweeps run until the off-diagonal Frobenius mass drops
// below tol.
std::vector<double> jacobi_eigenvalues(const ExactMatrix& m, double tol = 1e-12);

}  // namespace lapgraph
