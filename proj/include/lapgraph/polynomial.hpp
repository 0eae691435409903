#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lapgraph/rational.hpp"

namespace lapgraph {

// Univariate polynomial with exact integer coefficients, stored constant
// term first. Canonical form: no stored coefficient above the degree, the
// zero polynomial stores nothing.
class UniPolynomial {
 public:
  UniPolynomial() = default;
  explicit UniPolynomial(std::vector<Integer> coeffs);
  UniPolynomial(std::initializer_list<long> coeffs);

  static UniPolynomial constant(Integer c);
  static UniPolynomial monomial(Integer c, std::size_t degree);

  bool zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(std::size_t k) const;

  Integer operator()(const Integer& t) const;

  // p(t + delta), exact Taylor shift by Horner evaluation in (t + delta).
  UniPolynomial shifted_arg(long delta) const;

  UniPolynomial operator-() const;
  UniPolynomial& operator+=(const UniPolynomial& other);
  UniPolynomial& operator-=(const UniPolynomial& other);

  friend UniPolynomial operator+(UniPolynomial a, const UniPolynomial& b) { return a += b; }
  friend UniPolynomial operator-(UniPolynomial a, const UniPolynomial& b) { return a -= b; }
  friend UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b);
  friend UniPolynomial operator*(const Integer& c, const UniPolynomial& p);
  friend bool operator==(const UniPolynomial& a, const UniPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

}  // namespace lapgraph
