#include "bmpoly/real_roots.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "bmpoly/errors.hpp"
#include "int_poly.hpp"

namespace bmpoly {

namespace {

using detail::IntPoly;

std::size_t degree_of(const IntPoly& p) { return p.size() - 1; }

void require_nonconstant(const Poly& f, const char* what) {
  if (f.is_constant()) throw DegenerateInput(std::string(what) + " needs a polynomial of positive degree");
}

// Sturm chain over the integers, each member a positive multiple of the exact
// chain member, and divided through by gcd(f, f') so that it stays a Sturm
// sequence at multiple roots too. Sign variations match the exact chain at
// every point that is not a multiple root.
class SignChain {
 public:
  explicit SignChain(const IntPoly& f) {
    members_.push_back(f);
    IntPoly d = detail::derivative(f);
    detail::make_primitive(d);
    members_.push_back(std::move(d));
    while (true) {
      const IntPoly& a = members_[members_.size() - 2];
      const IntPoly& b = members_.back();
      auto pr = detail::pseudo_remainder(a, b);
      if (pr.remainder.empty()) break;
      // -rem(a, b) = -prem / lc(b)^steps
      const bool flip = !(sgn(b.back()) < 0 && pr.steps % 2 == 1);
      IntPoly next = std::move(pr.remainder);
      detail::make_primitive(next);
      if (flip) {
        for (auto& c : next) c = -c;
      }
      members_.push_back(std::move(next));
    }
    gcd_degree_ = degree_of(members_.back());
    if (gcd_degree_ > 0) {
      const IntPoly g = members_.back();
      for (auto& m : members_) m = detail::exact_quotient(m, g);
    }
  }

  std::size_t variations(const Rational& x) const {
    return count_changes([&](const IntPoly& p) { return detail::sign_at(p, x); });
  }

  std::size_t variations_at_infinity(int direction) const {
    return count_changes([&](const IntPoly& p) { return detail::sign_at_infinity(p, direction); });
  }

  std::size_t distinct_real_roots() const { return variations_at_infinity(-1) - variations_at_infinity(1); }

  // degree of gcd(f, f')
  std::size_t gcd_degree() const { return gcd_degree_; }

 private:
  template <class SignFn>
  std::size_t count_changes(SignFn&& sign) const {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& m : members_) {
      const int s = sign(m);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  std::vector<IntPoly> members_;
  std::size_t gcd_degree_ = 0;
};

Rational cauchy_bound(const IntPoly& p) {
  BigInt best = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    BigInt a = abs(p[i]);
    if (a > best) best = std::move(a);
  }
  return Rational(1) + Rational(best, abs(p.back()));
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) * Rational(BigInt(1), BigInt(2)); }

// Bisection isolation over open intervals whose endpoints are not roots of
// `poly`. `squarefree` is the polynomial the results are reported for: it
// equals poly times the linear factors of exact points already split off.
class Isolator {
 public:
  explicit Isolator(IntPoly squarefree) : squarefree_(std::move(squarefree)) {}

  std::vector<IsolatingInterval> run() {
    const Rational bound = cauchy_bound(squarefree_);
    SignChain chain(squarefree_);
    const Rational lo = -bound;
    split(squarefree_, chain, lo, bound, chain.variations(lo), chain.variations(bound));
    return std::move(out_);
  }

 private:
  void split(const IntPoly& poly, const SignChain& chain, const Rational& lo, const Rational& hi, std::size_t v_lo,
             std::size_t v_hi) {
    const std::size_t count = v_lo - v_hi;
    if (count == 0) return;
    if (count == 1) {
      finish_single(poly, lo, hi);
      return;
    }
    const Rational mid = midpoint(lo, hi);
    if (detail::sign_at(poly, mid) == 0) {
      const IntPoly linear{-mid.numerator(), mid.denominator()};
      const IntPoly rest = detail::exact_quotient(poly, linear);
      if (rest.size() >= 2) {
        const SignChain rest_chain(rest);
        split(rest, rest_chain, lo, mid, rest_chain.variations(lo), rest_chain.variations(mid));
        out_.push_back(IsolatingInterval::point(mid));
        split(rest, rest_chain, mid, hi, rest_chain.variations(mid), rest_chain.variations(hi));
      } else {
        out_.push_back(IsolatingInterval::point(mid));
      }
      return;
    }
    const std::size_t v_mid = chain.variations(mid);
    split(poly, chain, lo, mid, v_lo, v_mid);
    split(poly, chain, mid, hi, v_mid, v_hi);
  }

  // One simple root of poly in (lo, hi); shrink until neither endpoint is a
  // root of the full squarefree polynomial.
  void finish_single(const IntPoly& poly, Rational lo, Rational hi) {
    if (poly.size() == 2) {
      out_.push_back(IsolatingInterval::point(Rational(-poly[0], poly[1])));
      return;
    }
    const int s_lo = detail::sign_at(poly, lo);
    while (detail::sign_at(squarefree_, lo) == 0 || detail::sign_at(squarefree_, hi) == 0) {
      Rational mid = midpoint(lo, hi);
      const int s_mid = detail::sign_at(poly, mid);
      if (s_mid == 0) {
        out_.push_back(IsolatingInterval::point(mid));
        return;
      }
      if (s_mid == s_lo) {
        lo = std::move(mid);
      } else {
        hi = std::move(mid);
      }
    }
    out_.push_back(IsolatingInterval::open(lo, hi));
  }

  IntPoly squarefree_;
  std::vector<IsolatingInterval> out_;
};

IntPoly squarefree_int(const Poly& f) {
  const IntPoly p = detail::positive_primitive(f);
  return detail::exact_quotient(p, detail::gcd(p, detail::derivative(p)));
}

// One bisection step on an isolating interval of the squarefree polynomial s.
void refine(const IntPoly& s, IsolatingInterval& iv) {
  if (iv.is_point()) return;
  Rational mid = midpoint(iv.lo, iv.hi);
  const int s_mid = detail::sign_at(s, mid);
  if (s_mid == 0) {
    iv = IsolatingInterval::point(mid);
  } else if (s_mid == detail::sign_at(s, iv.lo)) {
    iv.lo = std::move(mid);
  } else {
    iv.hi = std::move(mid);
  }
}

// True when every point of a lies at or below every point of b (as sets the
// two are disjoint, or share only an excluded open endpoint).
bool precedes(const IsolatingInterval& a, const IsolatingInterval& b) {
  if (a.is_point() && b.is_point()) return a.lo < b.lo;
  return a.hi <= b.lo;
}

struct RootPiece {
  IntPoly poly;  // squarefree
  unsigned mult_f = 0;
  unsigned mult_g = 0;
};

// Splits the squarefree factorizations of f and g into pairwise coprime
// squarefree pieces tagged with their multiplicity in f and in g.
std::vector<RootPiece> coprime_pieces(const Poly& f, const Poly& g) {
  auto f_parts = squarefree_decomposition(f);
  auto g_parts = g.is_zero() ? std::vector<std::pair<Poly, unsigned>>{} : squarefree_decomposition(g);
  std::vector<std::pair<Poly, unsigned>> common_parts;
  std::vector<RootPiece> pieces;
  for (auto& [a, mf] : f_parts) {
    for (auto& [b, mg] : g_parts) {
      if (b.is_constant() || a.is_constant()) continue;
      Poly c = gcd(a, b);
      if (c.is_constant()) continue;
      a = exact_quotient(a, c);
      b = exact_quotient(b, c);
      pieces.push_back({detail::positive_primitive(c), mf, mg});
    }
    if (!a.is_constant()) pieces.push_back({detail::positive_primitive(a), mf, 0});
  }
  for (auto& [b, mg] : g_parts) {
    if (!b.is_constant()) pieces.push_back({detail::positive_primitive(b), 0, mg});
  }
  return pieces;
}

}  // namespace

SturmChain sturm_chain(const Poly& f) {
  require_nonconstant(f, "sturm_chain");
  SturmChain chain;
  chain.members.push_back(f);
  chain.members.push_back(derivative(f));
  while (true) {
    const auto& a = chain.members[chain.members.size() - 2];
    const auto& b = chain.members.back();
    Poly r = divrem(a, b).remainder;
    if (r.is_zero()) break;
    chain.members.push_back(-r);
  }
  return chain;
}

std::size_t sign_variations(const SturmChain& chain, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& m : chain.members) {
    const int s = evaluate(m, x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t count_real_roots(const Poly& f, const RootRange& range) {
  require_nonconstant(f, "count_real_roots");
  const SignChain chain(detail::positive_primitive(f));
  if (const auto* interval = std::get_if<HalfOpen>(&range)) {
    if (!(interval->lo < interval->hi)) throw std::invalid_argument("count_real_roots: empty interval");
    return chain.variations(interval->lo) - chain.variations(interval->hi);
  }
  return chain.distinct_real_roots();
}

bool is_real_rooted(const Poly& f) {
  if (f.is_zero()) throw DegenerateInput("is_real_rooted of the zero polynomial");
  if (f.is_constant()) return true;
  const SignChain chain(detail::positive_primitive(f));
  // the squarefree part has degree deg f - deg gcd(f, f')
  return chain.distinct_real_roots() == *f.degree() - chain.gcd_degree();
}

Rational cauchy_root_bound(const Poly& f) {
  require_nonconstant(f, "cauchy_root_bound");
  Rational best;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) best = std::max(best, f.coeffs()[i].abs());
  return Rational(1) + best / f.leading().abs();
}

std::string IsolatingInterval::str() const {
  if (is_point()) return "point " + lo.str();
  return "(" + lo.str() + ", " + hi.str() + ")";
}

std::vector<IsolatingInterval> isolate_real_roots(const Poly& f) {
  require_nonconstant(f, "isolate_real_roots");
  return Isolator(squarefree_int(f)).run();
}

std::string_view to_string(InterlaceVerdict v) {
  switch (v) {
    case InterlaceVerdict::strict: return "strict";
    case InterlaceVerdict::nonstrict: return "nonstrict";
    case InterlaceVerdict::none: return "none";
  }
  return "?";
}

InterlaceVerdict interlaces(const Poly& g, const Poly& f) {
  if (f.is_zero()) throw DegenerateInput("interlaces: f is the zero polynomial");
  if (g.is_zero()) {
    if (f.degree() == 1u) return InterlaceVerdict::strict;
    throw DegenerateInput("interlaces: g is the zero polynomial");
  }
  if (*f.degree() != *g.degree() + 1) return InterlaceVerdict::none;
  if (!is_real_rooted(f) || !is_real_rooted(g)) return InterlaceVerdict::none;

  const std::vector<RootPiece> pieces = coprime_pieces(f, g);
  struct Item {
    IsolatingInterval iv;
    std::size_t piece;
  };
  std::vector<Item> items;
  bool common_root = false;
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    if (pieces[p].mult_f > 0 && pieces[p].mult_g > 0) common_root = true;
    for (auto& iv : Isolator(pieces[p].poly).run()) items.push_back({std::move(iv), p});
  }

  // Pieces are pairwise coprime, so refinement separates every pair.
  const auto by_lo = [](const Item& a, const Item& b) {
    if (a.iv.lo != b.iv.lo) return a.iv.lo < b.iv.lo;
    return a.iv.is_point() && !b.iv.is_point();
  };
  while (true) {
    std::sort(items.begin(), items.end(), by_lo);
    bool overlapping = false;
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
      if (precedes(items[i].iv, items[i + 1].iv)) continue;
      overlapping = true;
      refine(pieces[items[i].piece].poly, items[i].iv);
      refine(pieces[items[i + 1].piece].poly, items[i + 1].iv);
    }
    if (!overlapping) break;
  }

  // Ascending roots with multiplicity, as ranks in the merged order.
  std::vector<std::size_t> f_roots;
  std::vector<std::size_t> g_roots;
  for (std::size_t rank = 0; rank < items.size(); ++rank) {
    const RootPiece& piece = pieces[items[rank].piece];
    f_roots.insert(f_roots.end(), piece.mult_f, rank);
    g_roots.insert(g_roots.end(), piece.mult_g, rank);
  }
  if (f_roots.size() != *f.degree() || g_roots.size() != *g.degree()) return InterlaceVerdict::none;
  for (std::size_t k = 0; k < g_roots.size(); ++k) {
    if (!(f_roots[k] <= g_roots[k] && g_roots[k] <= f_roots[k + 1])) return InterlaceVerdict::none;
  }
  return common_root ? InterlaceVerdict::nonstrict : InterlaceVerdict::strict;
}

}  // namespace bmpoly
