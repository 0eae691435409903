#include "lapgraph/polynomial.hpp"

#include <algorithm>

namespace lapgraph {

UniPolynomial::UniPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPolynomial::UniPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPolynomial UniPolynomial::constant(Integer c) {
  UniPolynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

UniPolynomial UniPolynomial::monomial(Integer c, std::size_t degree) {
  UniPolynomial p;
  if (c != 0) {
    p.coeffs_.assign(degree + 1, Integer(0));
    p.coeffs_[degree] = std::move(c);
  }
  return p;
}

Integer UniPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

Integer UniPolynomial::operator()(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

UniPolynomial UniPolynomial::shifted_arg(long delta) const {
  // Horner in the shifted variable: result = sum c_k (t + delta)^k.
  UniPolynomial result;
  const UniPolynomial base({delta, 1});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result = result * base + constant(*it);
  }
  return result;
}

UniPolynomial UniPolynomial::operator-() const {
  UniPolynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

UniPolynomial& UniPolynomial::operator+=(const UniPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

UniPolynomial& UniPolynomial::operator-=(const UniPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b) {
  if (a.zero() || b.zero()) return {};
  UniPolynomial c;
  c.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  c.trim();
  return c;
}

UniPolynomial operator*(const Integer& c, const UniPolynomial& p) {
  if (c == 0) return {};
  UniPolynomial q = p;
  for (auto& x : q.coeffs_) x *= c;
  return q;
}

void UniPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace lapgraph
