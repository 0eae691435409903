#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lapgraph/graph.hpp"
#include "lapgraph/polynomial.hpp"

namespace lapgraph {

// det(L - diag(x_1..x_n)) has 2^n coefficients; verification stays at desk
// scale, so the cap is a hard limit.
inline constexpr int kGenpolyMaxVertices = 16;

// Multilinear polynomial in n variables: a sparse map from variable
// subsets (bitmasks, bit i = x_i) to integer coefficients. Zero
// coefficients are never stored.
class MultilinearPolynomial {
 public:
  explicit MultilinearPolynomial(int variable_count);

  static MultilinearPolynomial constant(int variable_count, Integer c);
  static std::uint32_t mask_of(const std::vector<int>& vars);
  static std::vector<int> vars_of(std::uint32_t mask);

  int variable_count() const { return n_; }
  const std::map<std::uint32_t, Integer>& terms() const { return terms_; }
  Integer coeff(std::uint32_t mask) const;
  void add_term(std::uint32_t mask, const Integer& c);

  // (a + b x_var) * p; var must not occur in p.
  MultilinearPolynomial times_linear(int var, const Integer& a, const Integer& b) const;

  MultilinearPolynomial& operator+=(const MultilinearPolynomial& other);
  MultilinearPolynomial& operator-=(const MultilinearPolynomial& other);
  friend MultilinearPolynomial operator+(MultilinearPolynomial a,
                                         const MultilinearPolynomial& b) {
    return a += b;
  }
  friend MultilinearPolynomial operator-(MultilinearPolynomial a,
                                         const MultilinearPolynomial& b) {
    return a -= b;
  }
  friend bool operator==(const MultilinearPolynomial& a, const MultilinearPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_ = 0;
  std::map<std::uint32_t, Integer> terms_;
};

// The coefficient of prod_{i in S} x_i is (-1)^|S| det(L[V \ S]), each
// principal minor evaluated exactly by Bareiss; det of the empty minor is 1.
MultilinearPolynomial generalized_charpoly(const Graph& g);

// Single coefficient (-1)^|s| det(L[V \ s]); no size cap.
Integer coefficient(const Graph& g, const std::vector<int>& subset);

// Substitute x_i = t for every i.
UniPolynomial collapse(const MultilinearPolynomial& mp);

// Substitute x_i -> x_i - 1 for i in `shifted`.
MultilinearPolynomial substitute_shift(const MultilinearPolynomial& mp,
                                       const std::vector<int>& shifted);

// The part of generalized_charpoly(g) linear in x_v, built from the
// vertex-deleted graph: -x_v q(.. x_i - 1 over neighbors of v ..).
MultilinearPolynomial x1_term_prop31(const Graph& g, int v);

// generalized_charpoly(attach_pendant(g, v)) without forming the larger
// determinant: expansion along the new vertex's row.
MultilinearPolynomial pendant_genpoly(const Graph& g, int v);

}  // namespace lapgraph
