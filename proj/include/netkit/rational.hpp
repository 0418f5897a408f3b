#ifndef NETKIT_RATIONAL_HPP
#define NETKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace netkit {

/// Exact arbitrary-precision fraction. Always stored in lowest terms with a
/// positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}
  Rational(int value) : value_(value) {}
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  bool isZero() const { return sgn(value_) == 0; }
  bool isInteger() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// The value as int64 when it is an integer in range.
  std::optional<std::int64_t> toInt64() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace netkit

#endif
