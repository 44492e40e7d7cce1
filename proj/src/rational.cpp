#include "lielab/rational.hpp"

#include "lielab/error.hpp"

#include <cctype>

namespace lielab {

std::string to_string(const Rational& x) { return x.str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  if (!den.empty() && den.find_first_not_of('0') == std::string_view::npos) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  // Build from the integer parts so the quotient is reduced.
  using Int = boost::multiprecision::mpz_int;
  Rational value{Int{std::string(num)}};
  if (!den.empty()) value /= Rational{Int{std::string(den)}};
  return text.front() == '-' ? Rational(-value) : value;
}

}  // namespace lielab
