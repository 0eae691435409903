#include "lapgraph/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace lapgraph {

namespace {

// cos(num*pi/den) when it is rational (Niven's theorem: only these angles).
std::optional<Rational> exact_cos(long num, long den) {
  const long g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (num == 0) return Rational(1);
  if (den == 1) return Rational(-1);                  // pi
  if (den == 2) return Rational(0);                   // pi/2
  if (den == 3) return num == 1 ? Rational(1, 2) : Rational(-1, 2);
  return std::nullopt;
}

SpectrumEntry cos_entry(long num, long den, std::size_t mult) {
  // 2 - 2*cos(num*pi/den)
  if (auto c = exact_cos(num, den)) {
    Rational value = Rational(2) - Rational(2) * *c;
    return {value, mult, value.get_d()};
  }
  CosForm form{2, 2, num, den};
  const double v = form.value();
  return {form, mult, v};
}

SpectrumEntry rational_entry(Rational value, std::size_t mult) {
  const double v = value.get_d();
  return {std::move(value), mult, v};
}

}  // namespace

double CosForm::value() const {
  return a - b * std::cos(static_cast<double>(num) * std::numbers::pi / static_cast<double>(den));
}

ClosedFormSpectrum::ClosedFormSpectrum(std::vector<SpectrumEntry> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i - 1].approx > entries_[i].approx) {
      throw std::invalid_argument("spectrum entries must be ascending");
    }
  }
}

std::size_t ClosedFormSpectrum::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

std::vector<double> ClosedFormSpectrum::expanded() const {
  std::vector<double> values;
  values.reserve(total_multiplicity());
  for (const auto& e : entries_) {
    values.insert(values.end(), e.multiplicity, e.approx);
  }
  return values;
}

ClosedFormSpectrum closed_form_spectrum(const GraphFamily& family) {
  std::vector<SpectrumEntry> entries;
  switch (family.kind) {
    case GraphFamily::Kind::Path: {
      const long n = family.n;
      entries.push_back(rational_entry(Rational(0), 1));
      for (long k = 1; k < n; ++k) entries.push_back(cos_entry(k, n, 1));
      break;
    }
    case GraphFamily::Kind::Cycle: {
      // 2 - 2cos(2k*pi/n); k and n-k coincide, merged symbolically.
      const long n = family.n;
      entries.push_back(rational_entry(Rational(0), 1));
      for (long k = 1; 2 * k < n; ++k) entries.push_back(cos_entry(2 * k, n, 2));
      if (n % 2 == 0) entries.push_back(rational_entry(Rational(4), 1));
      break;
    }
    case GraphFamily::Kind::Complete: {
      entries.push_back(rational_entry(Rational(0), 1));
      if (family.n >= 2) {
        entries.push_back(rational_entry(Rational(family.n), family.n - 1));
      }
      break;
    }
    case GraphFamily::Kind::CompleteBipartite: {
      const int m = family.m;
      const int n = family.n;
      std::vector<std::pair<Rational, std::size_t>> raw{{Rational(0), 1}};
      if (n >= 2) raw.emplace_back(Rational(m), n - 1);
      if (m >= 2) raw.emplace_back(Rational(n), m - 1);
      raw.emplace_back(Rational(m + n), 1);
      std::sort(raw.begin(), raw.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto& [value, mult] : raw) {
        if (!entries.empty() && entries.back().exact() &&
            std::get<Rational>(entries.back().descriptor) == value) {
          entries.back().multiplicity += mult;
        } else {
          entries.push_back(rational_entry(value, mult));
        }
      }
      break;
    }
  }
  return ClosedFormSpectrum(std::move(entries));
}

UniPolynomial tridiagonal_charpoly(std::size_t n, TridiagKind kind) {
  if (kind == TridiagKind::Path && n < 1) {
    throw std::invalid_argument("path recurrence requires n >= 1");
  }
  if (kind == TridiagKind::Cycle && n < 3) {
    throw std::invalid_argument("cycle recurrence requires n >= 3");
  }
  if (kind == TridiagKind::Path && n == 1) {
    return UniPolynomial{0, -1};  // -t
  }

  // T_k = (2-t) T_{k-1} - T_{k-2}, the k x k all-(2-t) tridiagonal determinant.
  const UniPolynomial two_minus_t{2, -1};
  const UniPolynomial one_minus_t{1, -1};
  std::vector<UniPolynomial> t(n + 1);
  t[0] = UniPolynomial::constant(1);
  if (n >= 1) t[1] = two_minus_t;
  for (std::size_t k = 2; k <= n; ++k) t[k] = two_minus_t * t[k - 1] - t[k - 2];

  if (kind == TridiagKind::Cycle) {
    return t[n] - t[n - 2] - UniPolynomial::constant(2);
  }

  // D_k: same matrix with a (1-t) corner entry.
  const auto d = [&](std::size_t k) -> UniPolynomial {
    if (k == 0) return UniPolynomial::constant(1);
    UniPolynomial out = one_minus_t * t[k - 1];
    if (k >= 2) out -= t[k - 2];
    return out;
  };
  return one_minus_t * d(n - 1) - d(n - 2);
}

UniPolynomial star_charpoly(const UniPolynomial& p, std::size_t n) {
  if (static_cast<int>(n) != p.degree()) {
    throw std::invalid_argument("polynomial degree does not match the vertex count");
  }
  if (p.coeff(0) != 0) {
    throw std::invalid_argument("not a Laplacian charpoly: nonzero constant term");
  }

  const UniPolynomial q = p.shifted_arg(-1);  // p(t-1)

  // Synthetic division of q by (t - 1); the remainder q(1) = p(0) = 0.
  const auto& qc = q.coeffs();
  std::vector<Integer> h(qc.size() - 1, Integer(0));
  Integer carry = qc.back();
  for (std::size_t k = qc.size() - 1; k-- > 0;) {
    h[k] = carry;
    carry += qc[k];
  }
  if (carry != 0) throw std::logic_error("division by (1 - t) left a remainder");

  // q / (1-t) = -(q / (t-1)); multiply by -t(n+1-t) = t^2 - (n+1) t.
  const UniPolynomial quotient = -UniPolynomial(std::move(h));
  const UniPolynomial factor{0, -static_cast<long>(n) - 1, 1};
  return factor * quotient;
}

std::size_t zero_multiplicity(const UniPolynomial& p) {
  if (p.zero()) throw std::invalid_argument("zero polynomial has no root multiplicity");
  std::size_t k = 0;
  while (p.coeff(k) == 0) ++k;
  return k;
}

}  // namespace lapgraph
