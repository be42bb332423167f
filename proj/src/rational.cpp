#include "bmpoly/rational.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>

#include "bmpoly/errors.hpp"

namespace bmpoly {

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] { return ParseError("malformed rational: '" + std::string(text) + "'"); };
  const auto parse_int = [&](std::string_view s, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !s.empty() && s[0] == '-') start = 1;
    if (s.size() == start) throw bad();
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw bad();
    }
    return BigInt(std::string(s), 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, true));
  BigInt num = parse_int(text.substr(0, slash), true);
  BigInt den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw bad();
  return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  assert(is_canonical());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  assert(is_canonical());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  assert(is_canonical());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  assert(is_canonical());
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool Rational::is_canonical() const {
  if (sgn(value_.get_den()) <= 0) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return g == 1;
}

Rational pow2(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace bmpoly
