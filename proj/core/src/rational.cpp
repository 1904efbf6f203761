#include "loopforge/rational.hpp"

#include "loopforge/errors.hpp"

namespace loopforge {

namespace {

Integer parse_integer(const std::string& text, std::size_t offset) {
  try {
    return Integer(text);
  } catch (const std::runtime_error&) {
    throw ParseError("malformed integer '" + text + "'", offset);
  }
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational", 0);
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text, 0));
  Integer num = parse_integer(text.substr(0, slash), 0);
  Integer den = parse_integer(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace loopforge
