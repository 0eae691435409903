#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "lapgraph/graph.hpp"
#include "lapgraph/polynomial.hpp"

namespace lapgraph {

// a - b*cos(num*pi/den)
struct CosForm {
  long a = 0;
  long b = 0;
  long num = 0;
  long den = 1;

  double value() const;

  friend bool operator==(const CosForm&, const CosForm&) = default;
};

struct SpectrumEntry {
  std::variant<Rational, CosForm> descriptor;
  std::size_t multiplicity = 1;
  double approx = 0.0;

  bool exact() const { return std::holds_alternative<Rational>(descriptor); }
};

// Eigenvalues with multiplicities, ascending.
class ClosedFormSpectrum {
 public:
  explicit ClosedFormSpectrum(std::vector<SpectrumEntry> entries);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  std::size_t total_multiplicity() const;

  // One value per multiplicity, ascending.
  std::vector<double> expanded() const;

 private:
  std::vector<SpectrumEntry> entries_;
};

ClosedFormSpectrum closed_form_spectrum(const GraphFamily& family);

enum class TridiagKind { Path, Cycle };

// Characteristic polynomial of the path or cycle Laplacian from the
// tridiagonal determinant recurrence T_k = (2-t) T_{k-1} - T_{k-2}.
UniPolynomial tridiagonal_charpoly(std::size_t n, TridiagKind kind);

// Characteristic polynomial of star_of(g) from the one of g (a graph on
// n vertices): -t (n+1-t) p(t-1) / (1-t), with the division exact.
UniPolynomial star_charpoly(const UniPolynomial& p, std::size_t n);

// Exponent of t dividing p. Throws on the zero polynomial.
std::size_t zero_multiplicity(const UniPolynomial& p);

}  // namespace lapgraph
