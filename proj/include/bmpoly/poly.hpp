#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmpoly/rational.hpp"

namespace bmpoly {

/// Polynomial degree. std::nullopt stands for the degree of the zero
/// polynomial (minus infinity); it never participates in arithmetic.
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial over the rationals, lowest degree first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector. Values are immutable once built.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  /// c * x^k
  static Poly monomial(const Rational& c, std::size_t k);
  /// The polynomial x.
  static Poly identity();

  /// Parses the list form "[c0, c1, ...]".
  static Poly parse(std::string_view text);

  bool is_zero() const { return coeffs_.empty(); }
  Degree degree() const;
  /// Zero or degree 0.
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Zero, or positive leading coefficient.
  bool is_standard() const { return is_zero() || coeffs_.back().sign() > 0; }

  /// Throws DegenerateInput on the zero polynomial.
  const Rational& leading() const;
  /// Coefficient of x^i; zero past the degree.
  Rational coeff(std::size_t i) const;
  std::span<const Rational> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  /// "[c0, c1, ...]" with rationals in "num/den" form.
  std::string str() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);

  friend bool operator==(const Poly&, const Poly&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

enum class ArithOp { add, sub, mul };

/// Binary ring operation by tag; the operators above are the usual entry point.
Poly poly_arith(ArithOp op, const Poly& f, const Poly& g);
/// Multiplication by a rational scalar.
Poly scale(const Poly& f, const Rational& c);

Poly derivative(const Poly& f);

Rational evaluate(const Poly& f, const Rational& x);

/// f = quotient * g + remainder, deg remainder < deg g.
/// Throws DivisionByZeroPolynomial when g is zero.
DivRem divrem(const Poly& f, const Poly& g);

/// f / g where g is known to divide f; throws std::domain_error otherwise.
Poly exact_quotient(const Poly& f, const Poly& g);

/// f scaled to leading coefficient 1. Zero stays zero.
Poly monic(const Poly& f);

/// Monic greatest common divisor. Throws DegenerateInput when both are zero.
Poly gcd(const Poly& f, const Poly& g);

/// f / gcd(f, f'), monic. Throws DegenerateInput on zero.
Poly squarefree_part(const Poly& f);

/// Yun's decomposition f = c * prod_i a_i^i with a_i monic, squarefree and
/// pairwise coprime. Returns the nonconstant factors with their multiplicity,
/// ascending by multiplicity. Throws DegenerateInput on zero.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f);

/// f(x + c), expanded.
Poly taylor_shift(const Poly& f, const Rational& c);

/// prod (x - r) over the given roots; repeated roots give repeated factors.
Poly from_roots(std::span<const Rational> roots);

}  // namespace bmpoly
