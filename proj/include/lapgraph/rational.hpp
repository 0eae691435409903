#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lapgraph {

// Arbitrary-precision scalars. mpq_class keeps fractions canonical
// (gcd(num, den) = 1, den > 0) as long as inputs are canonical, which
// every routine in this library preserves.
using Integer = mpz_class;
using Rational = mpq_class;
using ExactVector = std::vector<Rational>;

std::string to_string(const Integer& z);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

Integer parse_integer(const std::string& text);
Rational parse_rational(const std::string& text);

}  // namespace lapgraph
