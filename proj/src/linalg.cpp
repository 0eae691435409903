#include "lapgraph/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

namespace lapgraph {

namespace {

void swap_rows(ExactMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

}  // namespace

RrefResult rref(const ExactMatrix& m) {
  ExactMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    swap_rows(a, pivot, rank);
    const Rational scale = a(rank, col);
    for (std::size_t j = col; j < cols; ++j) a(rank, j) /= scale;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t j = col; j < cols; ++j) a(r, j) -= factor * a(rank, j);
    }
    ++rank;
  }
  return {std::move(a), rank};
}

Rational det_bareiss(ExactMatrix a) {
  if (!a.square()) throw std::invalid_argument("determinant requires a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  Rational prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      swap_rows(a, k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Rational det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

ExactVector solve_linear(ExactMatrix a, ExactVector b) {
  if (!a.square()) throw std::invalid_argument("solve requires a square matrix");
  const std::size_t n = a.rows();
  if (b.size() != n) throw std::invalid_argument("right-hand side length mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError();
    swap_rows(a, pivot, col);
    std::swap(b[pivot], b[col]);
    const Rational scale = a(col, col);
    for (std::size_t j = col; j < n; ++j) a(col, j) /= scale;
    b[col] /= scale;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
      b[r] -= factor * b[col];
    }
  }
  return b;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse requires a square matrix");
  const std::size_t n = m.rows();
  ExactMatrix a = m;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError();
    swap_rows(a, pivot, col);
    swap_rows(inv, pivot, col);
    const Rational scale = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= scale;
      inv(col, j) /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= factor * a(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

ExactMatrix principal_submatrix(const ExactMatrix& m, const std::vector<std::size_t>& keep) {
  if (!m.square()) throw std::invalid_argument("principal submatrix requires a square matrix");
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] >= m.rows()) throw std::invalid_argument("submatrix index out of range");
    if (k > 0 && keep[k] <= keep[k - 1]) {
      throw std::invalid_argument("submatrix indices must be strictly increasing");
    }
  }
  ExactMatrix sub(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      sub(i, j) = m(keep[i], keep[j]);
    }
  }
  return sub;
}

MMatrixReport mmatrix_check(const ExactMatrix& m) {
  if (!m.square()) throw std::invalid_argument("mmatrix check requires a square matrix");
  const std::size_t n = m.rows();
  MMatrixReport report;

  for (std::size_t i = 0; i < n && report.diag_positive; ++i) {
    if (m(i, i) <= 0) {
      report.diag_positive = false;
      if (!report.witness) report.witness = {{i}};
    }
  }
  for (std::size_t i = 0; i < n && report.offdiag_nonpositive; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && m(i, j) > 0) {
        report.offdiag_nonpositive = false;
        if (!report.witness) report.witness = {{std::min(i, j), std::max(i, j)}};
        break;
      }
    }
  }

  std::vector<Rational> row_sum(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row_sum[i] += m(i, j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (row_sum[i] < 0) {
      report.rows_nonneg_sum = false;
      if (!report.witness) report.witness = {{i}};
      break;
    }
  }

  // Reverse BFS from positive-sum rows along arcs i -> j (m(i,j) != 0).
  std::vector<char> reaches_positive(n, 0);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    if (row_sum[i] > 0) {
      reaches_positive[i] = 1;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const std::size_t j = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      if (!reaches_positive[i] && i != j && m(i, j) != 0) {
        reaches_positive[i] = 1;
        queue.push_back(i);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (row_sum[i] == 0 && !reaches_positive[i]) {
      report.submatrix_condition = false;
      if (!report.witness) {
        // Forward closure of i: a principal index set with no arc leaving
        // it and no strictly positive row sum inside.
        std::vector<char> in_set(n, 0);
        std::vector<std::size_t> stack{i};
        in_set[i] = 1;
        while (!stack.empty()) {
          const std::size_t u = stack.back();
          stack.pop_back();
          for (std::size_t v = 0; v < n; ++v) {
            if (!in_set[v] && v != u && m(u, v) != 0) {
              in_set[v] = 1;
              stack.push_back(v);
            }
          }
        }
        std::vector<std::size_t> witness;
        for (std::size_t v = 0; v < n; ++v) {
          if (in_set[v]) witness.push_back(v);
        }
        report.witness = std::move(witness);
      }
      break;
    }
  }
  return report;
}

UniPolynomial charpoly(const ExactMatrix& m) {
  if (!m.square()) throw std::invalid_argument("charpoly requires a square matrix");
  if (!m.integer_valued()) throw std::invalid_argument("charpoly requires integer-valued entries");
  const std::size_t n = m.rows();

  std::vector<Integer> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_num();
  }

  // det(tI - A) = sum c[k] t^k, built by M_k = A M_{k-1} + c_{n-k+1} I,
  // c_{n-k} = -tr(A M_k) / k. Each division is exact.
  std::vector<Integer> c(n + 1, Integer(0));
  c[n] = 1;
  std::vector<Integer> work(n * n, Integer(0));  // M_k
  std::vector<Integer> am(n * n, Integer(0));    // A * M_k
  for (std::size_t k = 1; k <= n; ++k) {
    if (k == 1) {
      for (std::size_t i = 0; i < n; ++i) work[i * n + i] = 1;
    } else {
      work = am;
      for (std::size_t i = 0; i < n; ++i) work[i * n + i] += c[n - k + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Integer acc = 0;
        for (std::size_t l = 0; l < n; ++l) acc += a[i * n + l] * work[l * n + j];
        am[i * n + j] = std::move(acc);
      }
    }
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i * n + i];
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), trace.get_mpz_t(), Integer(k).get_mpz_t());
    if (r != 0) throw std::logic_error("trace recursion division was not exact");
    c[n - k] = -q;
  }

  if (n % 2 == 1) {
    for (auto& x : c) x = -x;
  }
  return UniPolynomial(std::move(c));
}

std::vector<double> jacobi_eigenvalues(const ExactMatrix& m, double tol) {
  if (!m.square()) throw std::invalid_argument("jacobi requires a square matrix");
  if (!m.symmetric()) throw std::invalid_argument("jacobi requires a symmetric matrix");
  if (!(tol > 0)) throw std::invalid_argument("jacobi tolerance must be positive");
  const std::size_t n = m.rows();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_d();
  }

  const auto offdiag_mass = [&] {
    double sum = 0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) sum += 2 * a[p][q] * a[p][q];
    }
    return std::sqrt(sum);
  };

  constexpr int kMaxSweeps = 128;
  int sweep = 0;
  while (offdiag_mass() >= tol) {
    if (++sweep > kMaxSweeps) throw std::runtime_error("jacobi iteration failed to converge");
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * apq);
        const double t =
            (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        const double tau = s / (1 + c);
        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = a[q][p] = 0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r][p];
          const double arq = a[r][q];
          a[r][p] = a[p][r] = arp - s * (arq + tau * arp);
          a[r][q] = a[q][r] = arq + s * (arp - tau * arq);
        }
      }
    }
  }

  std::vector<double> eigenvalues(n);
  for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a[i][i];
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return eigenvalues;
}

}  // namespace lapgraph
