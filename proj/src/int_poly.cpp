#include "int_poly.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace bmpoly::detail {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntPoly& p) {
  const BigInt g = content(p);
  if (g == 0 || g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly positive_primitive(const Poly& f) {
  BigInt lcm = 1;
  for (const auto& c : f.coeffs()) {
    const BigInt den = c.denominator();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  IntPoly out;
  out.reserve(f.size());
  for (const auto& c : f.coeffs()) {
    BigInt v = lcm / c.denominator();
    v *= c.numerator();
    out.push_back(std::move(v));
  }
  make_primitive(out);
  return out;
}

Poly to_poly(const IntPoly& p) {
  std::vector<Rational> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p) coeffs.emplace_back(c);
  return Poly(std::move(coeffs));
}

IntPoly derivative(const IntPoly& p) {
  IntPoly out;
  if (p.size() <= 1) return out;
  out.reserve(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<unsigned long>(i));
  return out;
}

PseudoRemainder pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.empty()) throw std::domain_error("pseudo-remainder by zero");
  PseudoRemainder out{a, 0};
  IntPoly& r = out.remainder;
  const std::size_t k = b.size() - 1;
  const BigInt& lb = b.back();
  BigInt lr;
  while (!r.empty() && r.size() - 1 >= k) {
    lr = r.back();
    const std::size_t shift = r.size() - 1 - k;
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j <= k; ++j) r[shift + j] -= lr * b[j];
    assert(r.back() == 0);
    trim(r);
    ++out.steps;
  }
  return out;
}

int sign_at(const IntPoly& p, const Rational& x) {
  if (p.empty()) return 0;
  const mpz_class& num = x.gmp().get_num();
  const mpz_class& den = x.gmp().get_den();
  BigInt acc = p.back();
  BigInt den_pow = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc *= num;
    acc += p[i] * den_pow;
  }
  return sgn(acc);
}

int sign_at_infinity(const IntPoly& p, int direction) {
  if (p.empty()) return 0;
  const int lead = sgn(p.back());
  const bool odd = (p.size() - 1) % 2 == 1;
  return (direction < 0 && odd) ? -lead : lead;
}

IntPoly gcd(IntPoly a, IntPoly b) {
  trim(a);
  trim(b);
  if (a.empty() && b.empty()) throw std::domain_error("gcd of two zero polynomials");
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = pseudo_remainder(a, b).remainder;
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.back() < 0) {
    for (auto& c : a) c = -c;
  }
  return a;
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.empty()) throw std::domain_error("exact quotient by zero");
  if (a.size() < b.size()) {
    if (a.empty()) return {};
    throw std::domain_error("exact quotient: divisor does not divide");
  }
  // lc(b)^(m-k+1) a = q b exactly; q is then a positive or negative multiple of
  // the true quotient depending on the sign of lc(b)^(m-k+1).
  const std::size_t k = b.size() - 1;
  const std::size_t qdeg = a.size() - 1 - k;
  IntPoly r = a;
  IntPoly q(qdeg + 1);
  const BigInt& lb = b.back();
  for (std::size_t step = qdeg + 1; step-- > 0;) {
    // r has degree <= k + step here
    BigInt lr = r.size() == k + step + 1 ? r.back() : BigInt(0);
    for (auto& c : r) c *= lb;
    for (auto& c : q) c *= lb;
    q[step] = lr;
    if (lr != 0) {
      for (std::size_t j = 0; j <= k; ++j) r[step + j] -= lr * b[j];
      trim(r);
    }
  }
  if (!r.empty()) throw std::domain_error("exact quotient: divisor does not divide");
  trim(q);
  make_primitive(q);
  // lb^(qdeg+1) * a = q' * b with q' a positive multiple of q: flip if negative.
  if (sgn(lb) < 0 && (qdeg + 1) % 2 == 1) {
    for (auto& c : q) c = -c;
  }
  return q;
}

}  // namespace bmpoly::detail
