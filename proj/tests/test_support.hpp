#pragma once

// Shared helpers for the unit suites: rational shorthands and a seeded
// generator of small random polynomials.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "bmpoly/poly.hpp"
#include "bmpoly/rational.hpp"

namespace bmpoly::test {

inline Rational q(std::string_view text) { return Rational::parse(text); }
inline Poly p(std::string_view text) { return Poly::parse(text); }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Rational rational(long max_num = 9, long max_den = 6) {
    return Rational(BigInt(integer(-max_num, max_num)), BigInt(integer(1, max_den)));
  }

  Poly poly(std::size_t max_deg) {
    std::vector<Rational> c(static_cast<std::size_t>(integer(0, static_cast<long>(max_deg))) + 1);
    for (auto& x : c) x = rational();
    return Poly(std::move(c));
  }

  Poly nonzero_poly(std::size_t max_deg) {
    for (;;) {
      Poly f = poly(max_deg);
      if (!f.is_zero()) return f;
    }
  }

  std::vector<Rational> roots(std::size_t count, long max_num = 12, long max_den = 4) {
    std::vector<Rational> r;
    for (std::size_t i = 0; i < count; ++i) r.push_back(rational(max_num, max_den));
    return r;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bmpoly::test
