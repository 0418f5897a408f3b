#include "netkit/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace netkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool isIntegerLiteral(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parseInteger(std::string_view s) {
  if (!isIntegerLiteral(s)) throw std::invalid_argument("not an integer literal: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(mpq_class(parseInteger(text)));
  const mpz_class num = parseInteger(trim(text.substr(0, slash)));
  const std::string_view denText = trim(text.substr(slash + 1));
  if (!denText.empty() && denText.front() == '-')
    throw std::invalid_argument("negative denominator in '" + std::string(text) + "'");
  const mpz_class den = parseInteger(denText);
  if (den == 0) throw std::domain_error("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (isInteger()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::optional<std::int64_t> Rational::toInt64() const {
  if (!isInteger()) return std::nullopt;
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(n.get_si());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace netkit
