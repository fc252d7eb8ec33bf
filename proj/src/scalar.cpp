#include "tropical/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace tropical {

Scalar finite_sub(const Scalar& a, const Scalar& b) {
  if (a.is_bottom() || b.is_bottom())
    throw std::invalid_argument("finite_sub: operand is -inf");
  return Scalar(Rational(a.value() - b.value()));
}

Scalar finite_neg(const Scalar& a) {
  if (a.is_bottom()) throw std::invalid_argument("finite_neg: operand is -inf");
  return Scalar(Rational(-a.value()));
}

namespace {

[[noreturn]] void bad_scalar(std::string_view text) {
  throw std::invalid_argument("malformed scalar: '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view text) {
  // [sign] digits [ '.' digits ]
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  boost::multiprecision::cpp_int num = 0;
  boost::multiprecision::cpp_int den = 1;
  std::size_t digits = 0;
  for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos) {
    num = num * 10 + (text[pos] - '0');
    ++digits;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t frac = 0;
    for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos) {
      num = num * 10 + (text[pos] - '0');
      den *= 10;
      ++frac;
    }
    if (frac == 0) bad_scalar(text);
    digits += frac;
  }
  if (digits == 0 || pos != text.size()) bad_scalar(text);
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  if (text == "-inf") return Scalar::bottom();
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    if (slash == 0 || slash + 1 >= text.size()) bad_scalar(text);
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("scalar with zero denominator");
    return Scalar(Rational(num / den));
  }
  return Scalar(parse_decimal(text));
}

std::string to_string(const Scalar& s) {
  if (s.is_bottom()) return "-inf";
  const Rational& v = s.value();
  if (boost::multiprecision::denominator(v) == 1)
    return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << to_string(s);
}

}  // namespace tropical
