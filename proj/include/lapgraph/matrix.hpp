#pragma once

#include <cstddef>
#include <vector>

#include "lapgraph/rational.hpp"

namespace lapgraph {

// Dense row-major matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool square() const { return rows_ == cols_; }
  bool integer_valued() const;
  bool symmetric() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactVector operator*(const ExactMatrix& a, const ExactVector& v);
ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace lapgraph
