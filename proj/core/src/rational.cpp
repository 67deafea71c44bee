#include "syz/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace syz {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer to_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("not an integer literal: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(to_integer(text));
  }
  Integer num = to_integer(text.substr(0, slash));
  Integer den = to_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_rational_short(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return format_rational(value);
}

}  // namespace syz
