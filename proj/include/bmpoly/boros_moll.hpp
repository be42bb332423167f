#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bmpoly/poly.hpp"
#include "bmpoly/rational.hpp"

namespace bmpoly {

/// One row d_0(n), ..., d_n(n) of the Boros-Moll triangle: the coefficients
/// of P_n(x), lowest degree first.
struct BMRow {
  unsigned n = 0;
  std::vector<Rational> d;

  friend bool operator==(const BMRow&, const BMRow&) = default;
};

enum class FamilyId { Q, R };

std::string_view to_string(FamilyId family);
/// Accepts "q"/"Q"/"r"/"R"; returns nullopt otherwise.
std::optional<FamilyId> parse_family(std::string_view text);

/// Row generation routes. All four must agree exactly.
enum class RowMethod { closed, double_sum, rec1, rec2 };

std::string_view to_string(RowMethod method);
std::optional<RowMethod> parse_row_method(std::string_view text);

/// Expands 2^{-2n} sum_j 2^j C(2n-2j, n-j) C(n+j, j) (x+1)^j coefficientwise.
BMRow bm_row_closed(unsigned n);

/// Expands the double sum over (j, k) of
/// C(2n+1, 2j) C(n-j, k) C(2k+2j, k+j) (x+1)^j (x-1)^k / 2^{3(k+j)}
/// by polynomial multiplication. Slow; meant as an oracle for small n.
BMRow bm_row_double_sum(unsigned n);

/// One step in n: d_i(n+1) from d_{i-1}(n) and d_i(n).
BMRow bm_row_rec1(const BMRow& prev);

/// Two steps in n: d_i(n+2) from d_i(n+1) and d_i(n) for 0 <= i <= n+1. The
/// top entry (where the recurrence's denominator vanishes) is filled from
/// 2^{-(n+2)} C(2n+4, n+2). Throws IndexMismatch unless prev1.n == prev2.n + 1.
BMRow bm_row_rec2(const BMRow& prev2, const BMRow& prev1);

/// Rows 0..n_max by the requested route (rec routes chain from closed seeds).
std::vector<BMRow> bm_rows(RowMethod method, unsigned n_max);

/// Single row by the requested route.
BMRow bm_row(RowMethod method, unsigned n);

/// Describes the first violated row invariant (shape, positivity, 2-adic
/// denominators, top coefficient), or nullopt when the row is well formed.
std::optional<std::string> row_invariant_violation(const BMRow& row);

/// P_n(x) = sum_i d_i(n) x^i
Poly p_polynomial(const BMRow& row);
Poly p_polynomial(unsigned n);
/// Q_n(x) = sum_i d_i(n) x^i / i!
Poly q_polynomial(const BMRow& row);
Poly q_polynomial(unsigned n);
/// R_n(x) = sum_i d_i(n) x^i / (i+2)!
Poly r_polynomial(const BMRow& row);
Poly r_polynomial(unsigned n);

Poly family_polynomial(FamilyId family, const BMRow& row);
Poly family_polynomial(FamilyId family, unsigned n);

/// Coefficients of the three-term recurrence
///   F_{n+1} = a(x) F_n + b(x) F_n' + c F_{n-1}
/// for Q or R at index n >= 1.
struct RecurrenceCoeffs {
  Poly a;
  Poly b;
  Poly c;
  FamilyId family = FamilyId::Q;
  unsigned n = 1;
};

/// Throws std::domain_error for n == 0 (the recurrences start at n = 1).
RecurrenceCoeffs recurrence_coeffs(FamilyId family, unsigned n);

/// F_0..F_{n_max} built from the seeds F_0, F_1 by the three-term recurrence.
std::vector<Poly> family_polynomials_rec(FamilyId family, unsigned n_max);

Poly q_polynomial_rec(unsigned n);
Poly r_polynomial_rec(unsigned n);

}  // namespace bmpoly
