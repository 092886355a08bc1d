#include "sepinv/rational.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

namespace sepinv {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view original = text;
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_digits(num) || !is_digits(den)) {
    throw std::invalid_argument("not a rational: '" + std::string(original) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(original) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const {
  // mpq get_str already omits "/1" and puts the sign on the numerator.
  return value_.get_str(10);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational rational_pow(const Rational& base, unsigned e) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), e);
  // gcd(a,b) = 1 implies gcd(a^e, b^e) = 1; mpz_pow_ui gives 0^0 = 1.
  return Rational(mpq_class(num, den));
}

std::strong_ordering rational_cmp(const Rational& a, const Rational& b) { return a <=> b; }

std::size_t RationalHash::operator()(const Rational& r) const {
  return std::hash<std::string>{}(r.to_string());
}

}  // namespace sepinv
