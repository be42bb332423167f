#include "bmpoly/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bmpoly/errors.hpp"
#include "int_poly.hpp"

namespace bmpoly {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::identity() { return monomial(1, 1); }

Poly Poly::parse(std::string_view text) {
  const auto strip = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("malformed polynomial: '" + std::string(text) + "'");
  }
  text = strip(text.substr(1, text.size() - 2));
  std::vector<Rational> coeffs;
  while (!text.empty()) {
    const auto comma = text.find(',');
    coeffs.push_back(Rational::parse(strip(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
    if (strip(text).empty()) throw ParseError("trailing comma in polynomial");
  }
  return Poly(std::move(coeffs));
}

Degree Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw DegenerateInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

std::string Poly::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ", ";
    out += coeffs_[i].str();
  }
  return out + "]";
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly poly_arith(ArithOp op, const Poly& f, const Poly& g) {
  switch (op) {
    case ArithOp::add: return f + g;
    case ArithOp::sub: return f - g;
    case ArithOp::mul: return f * g;
  }
  throw std::logic_error("unknown ArithOp");
}

Poly scale(const Poly& f, const Rational& c) { return f * c; }

Poly derivative(const Poly& f) {
  if (f.size() <= 1) return {};
  std::vector<Rational> out;
  out.reserve(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f.coeffs()[i] * Rational(i));
  return Poly(std::move(out));
}

Rational evaluate(const Poly& f, const Rational& x) {
  Rational acc;
  for (std::size_t i = f.size(); i-- > 0;) {
    acc *= x;
    acc += f.coeffs()[i];
  }
  return acc;
}

DivRem divrem(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZeroPolynomial();
  if (f.size() < g.size()) return {Poly(), f};
  std::vector<Rational> r(f.coeffs().begin(), f.coeffs().end());
  const std::size_t k = g.size() - 1;
  std::vector<Rational> q(f.size() - k);
  const Rational inv_lead = g.leading().inverse();
  for (std::size_t step = q.size(); step-- > 0;) {
    const Rational t = r[step + k] * inv_lead;
    if (t.is_zero()) continue;
    q[step] = t;
    for (std::size_t j = 0; j <= k; ++j) r[step + j] -= t * g.coeffs()[j];
  }
  r.resize(k);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_quotient(const Poly& f, const Poly& g) {
  auto [q, r] = divrem(f, g);
  if (!r.is_zero()) throw std::domain_error("exact_quotient: divisor does not divide");
  return q;
}

Poly monic(const Poly& f) {
  if (f.is_zero()) return f;
  return f * f.leading().inverse();
}

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw DegenerateInput("gcd of two zero polynomials");
  if (f.is_zero()) return monic(g);
  if (g.is_zero()) return monic(f);
  return monic(detail::to_poly(detail::gcd(detail::positive_primitive(f), detail::positive_primitive(g))));
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) throw DegenerateInput("squarefree part of the zero polynomial");
  if (f.is_constant()) return Poly::constant(1);
  const auto p = detail::positive_primitive(f);
  const auto h = detail::gcd(p, detail::derivative(p));
  return monic(detail::to_poly(detail::exact_quotient(p, h)));
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw DegenerateInput("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<Poly, unsigned>> out;
  if (f.is_constant()) return out;
  // Yun: b = f / gcd(f, f'), d = f'/gcd - b'; a_i = gcd(b, d) ...
  const Poly df = derivative(f);
  const Poly a0 = gcd(f, df);
  Poly b = exact_quotient(f, a0);
  Poly c = exact_quotient(df, a0);
  Poly d = c - derivative(b);
  for (unsigned i = 1; !b.is_constant(); ++i) {
    const Poly a = gcd(b, d);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - derivative(b);
    if (!a.is_constant()) out.emplace_back(monic(a), i);
  }
  return out;
}

Poly taylor_shift(const Poly& f, const Rational& c) {
  // Horner in the ring: ((a_n (x+c) + a_{n-1}) (x+c) + ...)
  const Poly step{c, Rational(1)};
  Poly acc;
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * step;
    acc += Poly::constant(f.coeffs()[i]);
  }
  return acc;
}

Poly from_roots(std::span<const Rational> roots) {
  Poly acc = Poly::constant(1);
  for (const auto& r : roots) acc *= Poly{-r, Rational(1)};
  return acc;
}

}  // namespace bmpoly
