#include "bmpoly/log_concavity.hpp"

#include <stdexcept>

#include "bmpoly/errors.hpp"

namespace bmpoly {

Seq l_operator(std::span<const Rational> a) {
  if (a.empty()) throw DegenerateInput("L operator on an empty sequence");
  Seq b;
  b.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational v = a[i] * a[i];
    if (i > 0 && i + 1 < a.size()) v -= a[i - 1] * a[i + 1];
    b.push_back(std::move(v));
  }
  return b;
}

LogConcavityVerdict k_log_concave(std::span<const Rational> a, unsigned k) {
  if (k == 0) throw std::invalid_argument("k_log_concave needs k >= 1");
  Seq current(a.begin(), a.end());
  for (unsigned level = 1; level <= k; ++level) {
    current = l_operator(current);
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (current[i].sign() < 0) return {false, LogConcavityFailure{level, i, current[i]}};
    }
  }
  return {};
}

bool is_unimodal(std::span<const Rational> a) {
  std::size_t i = 0;
  while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
  while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
  return i + 1 >= a.size();
}

Poly l_transform_poly(const Poly& f) {
  if (f.is_zero()) throw DegenerateInput("L transform of the zero polynomial");
  return Poly(l_operator(f.coeffs()));
}

}  // namespace bmpoly
