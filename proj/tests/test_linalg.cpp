#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "lapgraph/graph.hpp"
#include "lapgraph/linalg.hpp"
#include "support/test_support.hpp"

using namespace lapgraph;
namespace ts = lapgraph::testsupport;

namespace {

ExactMatrix mat(std::size_t rows, std::size_t cols, const std::vector<long>& values) {
  std::vector<Rational> entries(values.begin(), values.end());
  return ExactMatrix(rows, cols, std::move(entries));
}

// The block form every connected Laplacian reduces to: identity, a column
// of -1, and a zero bottom row.
bool is_connected_rref_form(const ExactMatrix& m, std::size_t n) {
  if (m.rows() != n || m.cols() != n) return false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (m(i, j) != (i == j ? 1 : 0)) return false;
    }
    if (m(i, n - 1) != -1) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (m(n - 1, j) != 0) return false;
  }
  return true;
}

ExactMatrix random_integer_matrix(ts::Rng& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  }
  return m;
}

}  // namespace

TEST_CASE("rref of the 3-path Laplacian") {
  const auto [r, rank] = rref(laplacian(generate(GraphFamily::path(3))));
  CHECK(r == mat(3, 3, {1, 0, -1, 0, 1, -1, 0, 0, 0}));
  CHECK(rank == 2);
}

TEST_CASE("rref of the identity") {
  const auto [r, rank] = rref(ExactMatrix::identity(3));
  CHECK(r == ExactMatrix::identity(3));
  CHECK(rank == 3);
}

TEST_CASE("rref of the 5-cycle Laplacian") {
  const auto [r, rank] = rref(laplacian(generate(GraphFamily::cycle(5))));
  CHECK(rank == 4);
  CHECK(is_connected_rref_form(r, 5));
}

TEST_CASE("rref block form for random connected graphs") {
  ts::Rng rng(3001);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> size(2, 10);
    const int n = size(rng);
    const auto [r, rank] = rref(laplacian(ts::random_connected_graph(rng, n)));
    CHECK(rank == static_cast<std::size_t>(n - 1));
    CHECK(is_connected_rref_form(r, n));
  }
}

TEST_CASE("rref is idempotent") {
  ts::Rng rng(3002);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 6);
    const ExactMatrix m = random_integer_matrix(rng, size(rng), -4, 4);
    const ExactMatrix once = rref(m).matrix;
    CHECK(rref(once).matrix == once);
  }
}

TEST_CASE("det_bareiss basics") {
  CHECK(det_bareiss(mat(2, 2, {2, -1, -1, 1})) == 1);
  CHECK(det_bareiss(ExactMatrix::identity(5)) == 1);
  CHECK(det_bareiss(laplacian(generate(GraphFamily::path(4)))) == 0);
  CHECK(det_bareiss(laplacian(generate(GraphFamily::complete(5)))) == 0);
  CHECK(det_bareiss(laplacian(generate(GraphFamily::cycle(6)))) == 0);
  CHECK_THROWS_AS(det_bareiss(ExactMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("det_bareiss agrees with cofactor expansion") {
  ts::Rng rng(3003);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 6);
    const ExactMatrix m = random_integer_matrix(rng, size(rng), -5, 5);
    const Rational det = det_bareiss(m);
    CHECK(det == ts::det_cofactor(m));
    CHECK(det.get_den() == 1);  // integer input keeps an integer determinant
  }
}

TEST_CASE("solve_linear") {
  const ExactVector solved = solve_linear(mat(2, 2, {2, -1, -1, 1}), {Rational(1), Rational(1)});
  CHECK(solved == ExactVector{Rational(2), Rational(3)});

  const ExactVector v{Rational(5), Rational(-1, 3), Rational(0)};
  CHECK(solve_linear(ExactMatrix::identity(3), v) == v);

  CHECK_THROWS_AS(
      solve_linear(laplacian(generate(GraphFamily::path(3))), ExactVector(3, Rational(1))),
      SingularMatrixError);
  CHECK_THROWS_AS(solve_linear(ExactMatrix(2, 3), ExactVector(2)), std::invalid_argument);
  CHECK_THROWS_AS(solve_linear(ExactMatrix::identity(2), ExactVector(3)), std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(inverse(mat(2, 2, {2, -1, -1, 1})) == mat(2, 2, {1, 1, 1, 2}));
  CHECK(inverse(ExactMatrix::identity(4)) == ExactMatrix::identity(4));
  CHECK_THROWS_AS(inverse(laplacian(generate(GraphFamily::path(2)))), SingularMatrixError);
}

TEST_CASE("inverse round-trips on random invertible matrices") {
  ts::Rng rng(3004);
  int verified = 0;
  while (verified < 25) {
    std::uniform_int_distribution<std::size_t> size(1, 7);
    const ExactMatrix m = random_integer_matrix(rng, size(rng), -6, 6);
    if (det_bareiss(m) == 0) continue;
    CHECK(inverse(m) * m == ExactMatrix::identity(m.rows()));
    ++verified;
  }
}

TEST_CASE("principal_submatrix") {
  const ExactMatrix l3 = laplacian(generate(GraphFamily::path(3)));
  CHECK(principal_submatrix(l3, {1, 2}) == mat(2, 2, {2, -1, -1, 1}));
  CHECK(principal_submatrix(l3, {0, 1, 2}) == l3);
  CHECK(principal_submatrix(laplacian(generate(GraphFamily::complete(4))), {2, 3}) ==
        mat(2, 2, {3, -1, -1, 3}));
  CHECK_THROWS_AS(principal_submatrix(l3, {0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(principal_submatrix(l3, {1, 1}), std::invalid_argument);
}

TEST_CASE("proper Laplacian submatrices have nonnegative inverses with positive row sums") {
  ts::Rng rng(3005);
  for (int trial = 0; trial < 120; ++trial) {
    std::uniform_int_distribution<int> size(2, 10);
    const int n = size(rng);
    const Graph g = ts::random_connected_graph(rng, n);
    const auto keep = ts::random_index_subset(rng, n - 1, 1);  // proper: vertex n-1 never kept
    const ExactMatrix inv = inverse(principal_submatrix(laplacian(g), keep));
    for (std::size_t i = 0; i < inv.rows(); ++i) {
      Rational row_sum = 0;
      for (std::size_t j = 0; j < inv.cols(); ++j) {
        CHECK(inv(i, j) >= 0);
        row_sum += inv(i, j);
      }
      CHECK(row_sum > 0);
    }
  }
}

TEST_CASE("charpoly fixed values") {
  CHECK(charpoly(laplacian(generate(GraphFamily::path(4)))) == UniPolynomial{0, -4, 10, -6, 1});
  // -t(3-t)^2 = -9t + 6t^2 - t^3
  CHECK(charpoly(laplacian(generate(GraphFamily::complete(3)))) == UniPolynomial{0, -9, 6, -1});
  CHECK(charpoly(ExactMatrix(1, 1)) == UniPolynomial{0, -1});
  CHECK_THROWS_AS(charpoly(ExactMatrix(2, 3)), std::invalid_argument);

  ExactMatrix half(1, 1);
  half(0, 0) = Rational(1, 2);
  CHECK_THROWS_AS(charpoly(half), std::invalid_argument);
}

TEST_CASE("charpoly evaluations match determinants") {
  ts::Rng rng(3006);
  const std::vector<long> points{-2, -1, 0, 1, 2, 7};
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 8);
    const std::size_t n = size(rng);
    const ExactMatrix m = random_integer_matrix(rng, n, -4, 4);
    const UniPolynomial p = charpoly(m);
    for (long t : points) {
      ExactMatrix shifted = m;
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= t;
      CHECK(Rational(p(Integer(t))) == det_bareiss(shifted));
    }
  }
}

TEST_CASE("jacobi eigenvalues of the 4-path") {
  const auto values = jacobi_eigenvalues(laplacian(generate(GraphFamily::path(4))));
  REQUIRE(values.size() == 4);
  for (int k = 0; k < 4; ++k) {
    const double expected = 2 - 2 * std::cos(k * std::numbers::pi / 4);
    CHECK(values[k] == doctest::Approx(expected).epsilon(1e-11));
  }
}

TEST_CASE("jacobi eigenvalues of identity and complete graph") {
  const auto ident = jacobi_eigenvalues(ExactMatrix::identity(3));
  for (double v : ident) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

  const auto k4 = jacobi_eigenvalues(laplacian(generate(GraphFamily::complete(4))));
  REQUIRE(k4.size() == 4);
  CHECK(k4[0] == doctest::Approx(0.0).epsilon(1e-11));
  for (int i = 1; i < 4; ++i) CHECK(k4[i] == doctest::Approx(4.0).epsilon(1e-11));
}

TEST_CASE("jacobi input validation") {
  CHECK_THROWS_AS(jacobi_eigenvalues(mat(2, 2, {1, 2, 3, 4})), std::invalid_argument);
  CHECK_THROWS_AS(jacobi_eigenvalues(ExactMatrix::identity(2), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(jacobi_eigenvalues(ExactMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("jacobi sum matches trace and Laplacians touch zero") {
  ts::Rng rng(3007);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> size(2, 10);
    const Graph g = ts::random_connected_graph(rng, size(rng));
    const ExactMatrix l = laplacian(g);
    const auto values = jacobi_eigenvalues(l);
    double sum = 0;
    double trace = 0;
    for (double v : values) sum += v;
    for (std::size_t i = 0; i < l.rows(); ++i) trace += l(i, i).get_d();
    CHECK(sum == doctest::Approx(trace).epsilon(1e-9));
    CHECK(std::abs(values.front()) < 1e-10);
  }
}
