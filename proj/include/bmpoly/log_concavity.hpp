#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bmpoly/poly.hpp"
#include "bmpoly/rational.hpp"

namespace bmpoly {

/// A finite, nonempty sequence a_0..a_n.
using Seq = std::vector<Rational>;

/// b_i = a_i^2 - a_{i-1} a_{i+1}, with zeros outside 0..n.
/// Throws DegenerateInput on an empty sequence.
Seq l_operator(std::span<const Rational> a);

struct LogConcavityFailure {
  unsigned level = 0;   // j >= 1: the failing iterate L^j
  std::size_t index = 0;  // first negative entry of L^j
  Rational value;

  friend bool operator==(const LogConcavityFailure&, const LogConcavityFailure&) = default;
};

struct LogConcavityVerdict {
  bool holds = true;
  std::optional<LogConcavityFailure> first_failure;  // present iff !holds
};

/// Checks that L^j(a) is entrywise nonnegative for j = 1..k and reports the
/// lexicographically first failing (level, index). k >= 1.
LogConcavityVerdict k_log_concave(std::span<const Rational> a, unsigned k);

/// True iff a_0 <= ... <= a_m >= ... >= a_n for some m.
bool is_unimodal(std::span<const Rational> a);

/// Applies l_operator to the coefficient sequence; the degree is preserved.
/// Throws DegenerateInput on the zero polynomial.
Poly l_transform_poly(const Poly& f);

}  // namespace bmpoly
