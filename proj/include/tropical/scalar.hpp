#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace tropical {

using Rational = boost::multiprecision::cpp_rational;

/// A max-plus scalar: either an exact rational or bottom (-infinity).
///
/// bottom is the neutral element of tadd (max) and absorbing for tmul (+).
/// Values are exact; equality and ordering are decidable, with bottom
/// strictly below every rational.
class Scalar {
 public:
  Scalar() : finite_(false) {}
  Scalar(int v) : finite_(true), value_(v) {}
  Scalar(long v) : finite_(true), value_(v) {}
  explicit Scalar(Rational v) : finite_(true), value_(std::move(v)) {}

  static Scalar bottom() { return Scalar(); }
  static Scalar one() { return Scalar(0); }
  static Scalar ratio(long num, long den) { return Scalar(Rational(num, den)); }

  bool is_bottom() const { return !finite_; }
  bool is_finite() const { return finite_; }

  /// The rational value; only meaningful when is_finite().
  const Rational& value() const { return value_; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
    if (!a.finite_) return std::strong_ordering::less;
    if (!b.finite_) return std::strong_ordering::greater;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

 private:
  bool finite_;
  Rational value_;  // kept at 0 while bottom
};

/// Tropical addition: max(a, b).
inline Scalar tadd(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

/// Tropical multiplication: a + b, with bottom absorbing.
inline Scalar tmul(const Scalar& a, const Scalar& b) {
  if (a.is_bottom() || b.is_bottom()) return Scalar::bottom();
  return Scalar(a.value() + b.value());
}

/// Exact difference a - b of two finite scalars (used by residuation).
Scalar finite_sub(const Scalar& a, const Scalar& b);

/// Additive inverse of a finite scalar.
Scalar finite_neg(const Scalar& a);

/// Parses "-inf", an exact decimal ("2", "-2", "2.5") or a fraction ("5/2").
/// Throws std::invalid_argument on malformed input.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace tropical
