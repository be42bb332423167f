#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bmpoly/poly.hpp"
#include "bmpoly/rational.hpp"

namespace bmpoly {

/// Exact Sturm chain p_0 = f, p_1 = f', p_{k+1} = -rem(p_{k-1}, p_k), up to
/// the last nonzero member (a constant multiple of gcd(f, f')).
struct SturmChain {
  std::vector<Poly> members;
};

/// Throws DegenerateInput when f is zero or constant.
SturmChain sturm_chain(const Poly& f);

/// Sign variations of the chain at x, zeros dropped.
std::size_t sign_variations(const SturmChain& chain, const Rational& x);

struct WholeLine {};
/// The half-open interval (lo, hi].
struct HalfOpen {
  Rational lo;
  Rational hi;
};
using RootRange = std::variant<WholeLine, HalfOpen>;

/// Number of distinct real roots of f in the range. Throws DegenerateInput
/// for constant f, std::invalid_argument when lo >= hi.
std::size_t count_real_roots(const Poly& f, const RootRange& range = WholeLine{});

/// Membership in RZ: every root is real, counted with multiplicity. Nonzero
/// constants are real-rooted by convention. Throws DegenerateInput on zero.
bool is_real_rooted(const Poly& f);

/// 1 + max_{i<n} |a_i| / |a_n|; every root lies strictly inside (-B, B).
/// Throws DegenerateInput for constant f.
Rational cauchy_root_bound(const Poly& f);

/// Either one exact rational root, or an open interval holding exactly one
/// root of the polynomial it was isolated for.
struct IsolatingInterval {
  enum class Kind { exact_point, open_interval };

  Kind kind = Kind::exact_point;
  Rational lo;  // equals hi for exact points
  Rational hi;

  static IsolatingInterval point(const Rational& p) { return {Kind::exact_point, p, p}; }
  static IsolatingInterval open(const Rational& lo, const Rational& hi) { return {Kind::open_interval, lo, hi}; }

  bool is_point() const { return kind == Kind::exact_point; }
  /// "point p" or "(lo, hi)"
  std::string str() const;

  friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

/// Isolates the distinct real roots of f (through its squarefree part) by
/// Sturm-guided bisection of (-B, B). Results are sorted and pairwise
/// disjoint; endpoints of open intervals are never roots of f.
/// Throws DegenerateInput for constant f.
std::vector<IsolatingInterval> isolate_real_roots(const Poly& f);

enum class InterlaceVerdict { strict, nonstrict, none };

std::string_view to_string(InterlaceVerdict v);

/// Whether g interlaces f: deg f = deg g + 1, both real-rooted, and with
/// roots r_n <= s_{n-1} <= r_{n-1} <= ... <= s_1 <= r_1. Strict when, in
/// addition, f and g share no root. Any constant g interlaces a linear f
/// strictly, including g = 0. Throws DegenerateInput when f is zero, or when
/// g is zero and f is not linear.
InterlaceVerdict interlaces(const Poly& g, const Poly& f);

}  // namespace bmpoly
