#pragma once

#include <stdexcept>

namespace bmpoly {

// Division by the zero polynomial (divrem, exact division).
class DivisionByZeroPolynomial : public std::domain_error {
 public:
  DivisionByZeroPolynomial() : std::domain_error("division by the zero polynomial") {}
};

// An input outside the operation's domain: a zero or constant polynomial where
// a positive degree is needed, both gcd arguments zero, an empty sequence.
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Recurrence coefficient polynomials with the wrong degree shape.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two rows passed to a two-step recurrence that are not consecutive.
class IndexMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input (rationals, polynomial lists, cache records).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bmpoly
