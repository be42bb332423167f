#pragma once

// Integer-coefficient polynomial kernels used behind the rational API: sign
// evaluation, pseudo-remainders and primitive remainder sequences. Everything
// here works up to positive constant factors, which is all that sign
// variation counts and monic gcds need.

#include <cstddef>
#include <vector>

#include "bmpoly/poly.hpp"
#include "bmpoly/rational.hpp"

namespace bmpoly::detail {

/// Lowest degree first, no trailing zeros; empty is zero.
using IntPoly = std::vector<BigInt>;

void trim(IntPoly& p);

/// Positive content (gcd of the coefficients); zero for the zero polynomial.
BigInt content(const IntPoly& p);

/// Divides by the positive content in place.
void make_primitive(IntPoly& p);

/// The primitive integer polynomial that is a positive multiple of f.
IntPoly positive_primitive(const Poly& f);

Poly to_poly(const IntPoly& p);

IntPoly derivative(const IntPoly& p);

struct PseudoRemainder {
  IntPoly remainder;
  // lc(b)^steps * a = q * b + remainder
  std::size_t steps = 0;
};

PseudoRemainder pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Sign of p(x) for rational x, via homogeneous Horner over the integers.
int sign_at(const IntPoly& p, const Rational& x);

/// Sign of p as x -> +infinity (direction > 0) or -infinity (direction < 0).
int sign_at_infinity(const IntPoly& p, int direction);

/// Primitive gcd with positive leading coefficient via the primitive
/// remainder sequence. At least one argument must be nonzero.
IntPoly gcd(IntPoly a, IntPoly b);

/// Exact quotient a / b over the rationals, returned as a positive primitive
/// multiple. b must divide a.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);

}  // namespace bmpoly::detail
