#include "lapgraph/rational.hpp"

#include <stdexcept>

namespace lapgraph {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Integer parse_integer(const std::string& text) {
  Integer z;
  if (z.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed integer: \"" + text + "\"");
  }
  return z;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_integer(text));
  }
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator: \"" + text + "\"");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace lapgraph
