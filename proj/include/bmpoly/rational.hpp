#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bmpoly {

using BigInt = mpz_class;

/// Exact rational number backed by GMP.
///
/// Every value is held in lowest terms with a positive denominator, so equality
/// is structural. Text form is "num/den", with "/den" omitted when den == 1.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      value_ = static_cast<long>(v);
    } else {
      value_ = static_cast<unsigned long>(v);
    }
  }

  explicit Rational(const BigInt& v) : value_(v) {}

  /// Throws std::domain_error when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  explicit Rational(const mpq_class& v);

  /// Parses "num" or "num/den" (optional leading '-', no spaces).
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  /// Throws std::domain_error on zero.
  Rational inverse() const;

  std::string str() const { return value_.get_str(); }

  const mpq_class& gmp() const { return value_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  /// Lowest terms and positive denominator; used by debug assertions.
  bool is_canonical() const;

 private:
  mpq_class value_;
};

/// 2^e as a rational; negative exponents give 1/2^|e|.
Rational pow2(long e);

/// Binomial coefficient C(n, k); zero when k < 0, k > n or n < 0.
BigInt binomial(long n, long k);

/// n! for n >= 0.
BigInt factorial(long n);

}  // namespace bmpoly
