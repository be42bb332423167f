#include "bmpoly/boros_moll.hpp"

#include <stdexcept>

#include "bmpoly/errors.hpp"

namespace bmpoly {

namespace {

Rational ratio(long num, long den) { return Rational(BigInt(num), BigInt(den)); }

Rational top_coefficient(unsigned n) {
  return Rational(binomial(2L * n, n)) * pow2(-static_cast<long>(n));
}

void check_shape(const BMRow& row) {
  if (row.d.size() != row.n + 1) {
    throw std::invalid_argument("BMRow " + std::to_string(row.n) + " has " + std::to_string(row.d.size()) +
                                " entries");
  }
}

// d_i(n) with zero outside 0..n.
Rational entry(const BMRow& row, long i) {
  if (i < 0 || i > static_cast<long>(row.n)) return {};
  return row.d[static_cast<std::size_t>(i)];
}

Poly divided_by_factorials(const BMRow& row, unsigned offset) {
  std::vector<Rational> coeffs;
  coeffs.reserve(row.d.size());
  BigInt fact = factorial(offset);
  for (std::size_t i = 0; i < row.d.size(); ++i) {
    if (i > 0) fact *= static_cast<unsigned long>(i + offset);
    coeffs.push_back(row.d[i] / Rational(fact));
  }
  return Poly(std::move(coeffs));
}

}  // namespace

std::string_view to_string(FamilyId family) { return family == FamilyId::Q ? "Q" : "R"; }

std::optional<FamilyId> parse_family(std::string_view text) {
  if (text == "q" || text == "Q") return FamilyId::Q;
  if (text == "r" || text == "R") return FamilyId::R;
  return std::nullopt;
}

std::string_view to_string(RowMethod method) {
  switch (method) {
    case RowMethod::closed: return "closed";
    case RowMethod::double_sum: return "double-sum";
    case RowMethod::rec1: return "rec1";
    case RowMethod::rec2: return "rec2";
  }
  return "?";
}

std::optional<RowMethod> parse_row_method(std::string_view text) {
  for (auto m : {RowMethod::closed, RowMethod::double_sum, RowMethod::rec1, RowMethod::rec2}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

BMRow bm_row_closed(unsigned n) {
  // coefficient of x^i: 2^{-2n} sum_{j>=i} 2^j C(2n-2j, n-j) C(n+j, j) C(j, i)
  std::vector<BigInt> weight(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    weight[j] = binomial(2L * (n - j), n - j) * binomial(n + j, j);
    weight[j] <<= j;
  }
  BMRow row{n, std::vector<Rational>(n + 1)};
  const Rational scale = pow2(-2L * n);
  for (unsigned i = 0; i <= n; ++i) {
    BigInt sum = 0;
    for (unsigned j = i; j <= n; ++j) sum += weight[j] * binomial(j, i);
    row.d[i] = Rational(sum) * scale;
  }
  return row;
}

BMRow bm_row_double_sum(unsigned n) {
  const Poly x_plus_1{Rational(1), Rational(1)};
  const Poly x_minus_1{Rational(-1), Rational(1)};
  std::vector<Poly> plus_pow{Poly::constant(1)};
  std::vector<Poly> minus_pow{Poly::constant(1)};
  for (unsigned e = 1; e <= n; ++e) {
    plus_pow.push_back(plus_pow.back() * x_plus_1);
    minus_pow.push_back(minus_pow.back() * x_minus_1);
  }
  Poly total;
  for (unsigned j = 0; j <= n; ++j) {
    for (unsigned k = 0; k + j <= n; ++k) {
      const BigInt weight = binomial(2L * n + 1, 2L * j) * binomial(n - j, k) * binomial(2L * (k + j), k + j);
      if (weight == 0) continue;
      const Rational c = Rational(weight) * pow2(-3L * (k + j));
      total += (plus_pow[j] * minus_pow[k]) * c;
    }
  }
  BMRow row{n, std::vector<Rational>(n + 1)};
  for (unsigned i = 0; i <= n; ++i) row.d[i] = total.coeff(i);
  return row;
}

BMRow bm_row_rec1(const BMRow& prev) {
  check_shape(prev);
  const long n = prev.n;
  BMRow next{prev.n + 1, std::vector<Rational>(prev.n + 2)};
  for (long i = 0; i <= n + 1; ++i) {
    next.d[static_cast<std::size_t>(i)] =
        ratio(n + i, n + 1) * entry(prev, i - 1) + ratio(4 * n + 2 * i + 3, 2 * (n + 1)) * entry(prev, i);
  }
  return next;
}

BMRow bm_row_rec2(const BMRow& prev2, const BMRow& prev1) {
  check_shape(prev2);
  check_shape(prev1);
  if (prev1.n != prev2.n + 1) {
    throw IndexMismatch("bm_row_rec2 needs consecutive rows, got n = " + std::to_string(prev2.n) + " and " +
                        std::to_string(prev1.n));
  }
  const long n = prev2.n;
  BMRow next{prev2.n + 2, std::vector<Rational>(prev2.n + 3)};
  for (long i = 0; i <= n + 1; ++i) {
    const Rational a = ratio(8 * n * n + 24 * n + 19 - 4 * i * i, 2 * (n + 2 - i) * (n + 2));
    const Rational b = ratio((n + i + 1) * (4 * n + 3) * (4 * n + 5), 4 * (n + 2 - i) * (n + 1) * (n + 2));
    next.d[static_cast<std::size_t>(i)] = a * entry(prev1, i) - b * entry(prev2, i);
  }
  next.d.back() = top_coefficient(next.n);
  return next;
}

std::vector<BMRow> bm_rows(RowMethod method, unsigned n_max) {
  std::vector<BMRow> rows;
  rows.reserve(n_max + 1);
  switch (method) {
    case RowMethod::closed:
      for (unsigned n = 0; n <= n_max; ++n) rows.push_back(bm_row_closed(n));
      break;
    case RowMethod::double_sum:
      for (unsigned n = 0; n <= n_max; ++n) rows.push_back(bm_row_double_sum(n));
      break;
    case RowMethod::rec1:
      rows.push_back(bm_row_closed(0));
      for (unsigned n = 1; n <= n_max; ++n) rows.push_back(bm_row_rec1(rows.back()));
      break;
    case RowMethod::rec2:
      rows.push_back(bm_row_closed(0));
      if (n_max >= 1) rows.push_back(bm_row_closed(1));
      for (unsigned n = 2; n <= n_max; ++n) rows.push_back(bm_row_rec2(rows[n - 2], rows[n - 1]));
      break;
  }
  return rows;
}

BMRow bm_row(RowMethod method, unsigned n) {
  switch (method) {
    case RowMethod::closed: return bm_row_closed(n);
    case RowMethod::double_sum: return bm_row_double_sum(n);
    default: return bm_rows(method, n).back();
  }
}

std::optional<std::string> row_invariant_violation(const BMRow& row) {
  if (row.d.size() != row.n + 1) return "row " + std::to_string(row.n) + " has wrong length";
  BigInt pow4 = 1;
  pow4 <<= 2 * row.n;
  for (std::size_t i = 0; i < row.d.size(); ++i) {
    if (row.d[i].sign() <= 0) return "d_" + std::to_string(i) + " is not positive";
    if (!mpz_divisible_p(pow4.get_mpz_t(), row.d[i].denominator().get_mpz_t())) {
      return "denominator of d_" + std::to_string(i) + " does not divide 2^(2n)";
    }
  }
  if (row.d.back() != top_coefficient(row.n)) return "top coefficient differs from 2^-n C(2n, n)";
  return std::nullopt;
}

Poly p_polynomial(const BMRow& row) { return Poly(row.d); }
Poly p_polynomial(unsigned n) { return p_polynomial(bm_row_closed(n)); }
Poly q_polynomial(const BMRow& row) { return divided_by_factorials(row, 0); }
Poly q_polynomial(unsigned n) { return q_polynomial(bm_row_closed(n)); }
Poly r_polynomial(const BMRow& row) { return divided_by_factorials(row, 2); }
Poly r_polynomial(unsigned n) { return r_polynomial(bm_row_closed(n)); }

Poly family_polynomial(FamilyId family, const BMRow& row) {
  return family == FamilyId::Q ? q_polynomial(row) : r_polynomial(row);
}

Poly family_polynomial(FamilyId family, unsigned n) { return family_polynomial(family, bm_row_closed(n)); }

RecurrenceCoeffs recurrence_coeffs(FamilyId family, unsigned n_index) {
  if (n_index == 0) throw std::domain_error("recurrence coefficients are defined for n >= 1");
  const long n = n_index;
  RecurrenceCoeffs rc;
  rc.family = family;
  rc.n = n_index;
  if (family == FamilyId::Q) {
    const long den = (n + 1) * (n + 1);
    rc.a = Poly{ratio(8 * n * n + 8 * n + 3, 2 * den), ratio(2 * n + 1, den)};
    rc.b = Poly{Rational(0), ratio(1, den)};
    rc.c = Poly::constant(-ratio((4 * n - 1) * (4 * n + 1), 4 * den));
  } else {
    const long den = (n + 1) * (n + 3);
    rc.a = Poly{ratio(8 * n * n + 8 * n + 7, 2 * den), ratio(2 * n + 1, den)};
    rc.b = Poly{Rational(0), ratio(5, den)};
    rc.c = Poly::constant(-ratio((4 * n - 1) * (4 * n + 1) * (n - 2), 4 * n * den));
  }
  return rc;
}

std::vector<Poly> family_polynomials_rec(FamilyId family, unsigned n_max) {
  std::vector<Poly> out;
  out.reserve(n_max + 1);
  out.push_back(family_polynomial(family, 0));
  if (n_max >= 1) out.push_back(family_polynomial(family, 1));
  for (unsigned n = 1; n < n_max; ++n) {
    const RecurrenceCoeffs rc = recurrence_coeffs(family, n);
    out.push_back(rc.a * out[n] + rc.b * derivative(out[n]) + rc.c * out[n - 1]);
  }
  return out;
}

Poly q_polynomial_rec(unsigned n) { return family_polynomials_rec(FamilyId::Q, n).back(); }
Poly r_polynomial_rec(unsigned n) { return family_polynomials_rec(FamilyId::R, n).back(); }

}  // namespace bmpoly
