#include "ttp/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "ttp/errors.hpp"

namespace ttp {

namespace {

bool is_integer_text(std::string_view text) {
  if (text.empty()) return false;
  std::size_t pos = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (pos == text.size()) return false;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  if (!is_integer_text(text)) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("signed denominator in '" + std::string(text) + "'");
  }
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

double to_double(const Rational& value) { return value.get_d(); }

Rational from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("non-finite value");
  return Rational(value);
}

}  // namespace ttp
