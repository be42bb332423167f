// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "bmpoly/boros_moll.hpp"
#include "bmpoly/log_concavity.hpp"
#include "bmpoly/real_roots.hpp"
#include "bmpoly/verification.hpp"

using namespace bmpoly;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Rational q(const char* s) { return Rational::parse(s); }

Outcome ac1() {
  const auto r1 = bm_rows(RowMethod::rec1, 30);
  const auto r2 = bm_rows(RowMethod::rec2, 30);
  for (unsigned n = 0; n <= 30; ++n) {
    const BMRow c = bm_row_closed(n);
    if (!(c == bm_row_double_sum(n) && c == r1[n] && c == r2[n])) return {false, "routes differ at n=" + std::to_string(n)};
  }
  return {true, "four routes agree for n <= 30"};
}

Outcome ac2() {
  const bool ok = bm_row_closed(1).d == std::vector<Rational>{q("3/2"), 1} &&
                  bm_row_closed(2).d == std::vector<Rational>{q("21/8"), q("15/4"), q("3/2")} &&
                  q_polynomial(2) == Poly({q("21/8"), q("15/4"), q("3/4")}) &&
                  r_polynomial(2) == Poly({q("21/16"), q("5/8"), q("1/16")});
  return {ok, "d(1), d(2), Q_2, R_2"};
}

Outcome ac3() {
  const auto qs = family_polynomials_rec(FamilyId::Q, 50);
  const auto rs = family_polynomials_rec(FamilyId::R, 50);
  for (unsigned n = 0; n <= 50; ++n) {
    if (qs[n] != q_polynomial(n)) return {false, "Q mismatch at n=" + std::to_string(n)};
    if (rs[n] != r_polynomial(n)) return {false, "R mismatch at n=" + std::to_string(n)};
  }
  return {true, "recurrence chains match for n <= 50"};
}

Outcome ac4(RowCache& cache, unsigned jobs) {
  const VerifyOptions opts{&cache, jobs};
  const auto rq = verify_sturm_sequence(FamilyId::Q, 50, opts);
  const auto rr = verify_sturm_sequence(FamilyId::R, 50, opts);
  // base cases again, directly
  for (unsigned n = 0; n <= 3; ++n) {
    if (!is_real_rooted(r_polynomial(n))) return {false, "R_" + std::to_string(n) + " not real-rooted"};
    if (n > 0 && interlaces(r_polynomial(n - 1), r_polynomial(n)) != InterlaceVerdict::strict) {
      return {false, "R_" + std::to_string(n - 1) + " does not strictly interlace R_" + std::to_string(n)};
    }
  }
  const bool ok = rq.passed() && rr.passed();
  return {ok, "Q failures=" + std::to_string(rq.failures.size()) + ", R failures=" + std::to_string(rr.failures.size())};
}

Outcome ac5() {
  if (recurrence_coeffs(FamilyId::R, 1).c.coeff(0) != q("15/32")) return {false, "R c_1 != 15/32"};
  if (check_liu_wang_side_conditions(recurrence_coeffs(FamilyId::R, 1))) return {false, "R n=1 unexpectedly passes"};
  for (unsigned n = 1; n <= 50; ++n) {
    if (!check_liu_wang_side_conditions(recurrence_coeffs(FamilyId::Q, n))) return {false, "Q fails at n=" + std::to_string(n)};
    if (n >= 3 && !check_liu_wang_side_conditions(recurrence_coeffs(FamilyId::R, n))) {
      return {false, "R fails at n=" + std::to_string(n)};
    }
  }
  return {true, "Q passes 1..50, R fails at 1 and passes 3..50"};
}

Outcome ac6(RowCache& cache, unsigned jobs) {
  const VerifyOptions opts{&cache, jobs};
  std::string detail;
  bool ok = verify_k_logconcavity(60, 2, opts).passed() && verify_k_logconcavity(60, 3, opts).passed();
  detail = "k<=3 up to n=60";
  for (unsigned k = 4; k <= 5; ++k) ok = ok && verify_k_logconcavity(40, k, opts).passed();
  return {ok, detail + ", k<=5 up to n=40"};
}

Outcome ac7(RowCache& cache, unsigned jobs) {
  const auto r = verify_coefficient_identities(50, VerifyOptions{&cache, jobs});
  return {r.passed(), "failures=" + std::to_string(r.failures.size())};
}

Outcome ac8(unsigned jobs) {
  const auto r = branden_random_property(200, 12, 42, VerifyOptions{nullptr, jobs});
  return {r.passed(), "200 trials, failures=" + std::to_string(r.failures.size())};
}

Outcome ac9() {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t deg = 1 + rng() % 10;
    std::vector<Rational> roots;
    for (std::size_t i = 0; i < deg; ++i) {
      const long num = static_cast<long>(rng() % 41) - 20;
      const long den = 1 + static_cast<long>(rng() % 6);
      roots.emplace_back(num, den);
    }
    const Poly f = from_roots(roots);
    std::vector<Rational> distinct = roots;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    if (count_real_roots(f) != distinct.size()) return {false, "count wrong at trial " + std::to_string(trial)};
    const auto iv = isolate_real_roots(f);
    if (iv.size() != distinct.size()) return {false, "isolation size wrong at trial " + std::to_string(trial)};
    for (std::size_t i = 0; i < iv.size(); ++i) {
      const auto& I = iv[i];
      if (I.is_point()) {
        if (!evaluate(f, I.lo).is_zero()) return {false, "point is not a root"};
      } else {
        // root inside and sign change across the ends of the squarefree part
        const Poly sf = squarefree_part(f);
        if (evaluate(sf, I.lo).sign() * evaluate(sf, I.hi).sign() >= 0) return {false, "no sign change"};
        if (!(I.lo < distinct[i] && distinct[i] < I.hi)) return {false, "root not enclosed"};
      }
      if (I.is_point() && I.lo != distinct[i]) return {false, "point is the wrong root"};
      // open intervals may share an endpoint with a neighbour; points may not
      if (i > 0) {
        const auto& prev = iv[i - 1];
        const bool touching_ok = prev.hi == I.lo && !prev.is_point() && !I.is_point();
        if (!(prev.hi < I.lo || touching_ok)) return {false, "regions overlap"};
      }
    }
  }
  return {true, "100 random products"};
}

}  // namespace

int main() {
  const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  RowCache cache;
  struct Criterion {
    const char* id;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1 four row routes agree, n <= 30", 10, ac1},
      {"AC2 anchor values", 0, ac2},
      {"AC3 Q/R recurrence chains, n <= 50", 60, ac3},
      {"AC4 real-rootedness and strict interlacing, n <= 50", 0, [&] { return ac4(cache, jobs); }},
      {"AC5 Liu-Wang side conditions", 0, ac5},
      {"AC6 k-log-concavity", 300, [&] { return ac6(cache, jobs); }},
      {"AC7 coefficient identities, n <= 50", 0, [&] { return ac7(cache, jobs); }},
      {"AC8 L-transform property, 200 trials", 0, [&] { return ac8(jobs); }},
      {"AC9 Sturm count and isolation oracle", 0, ac9},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.budget_s > 0 && s > c.budget_s) {
      o.ok = false;
      o.detail += " (over time budget " + std::to_string(static_cast<int>(c.budget_s)) + " s)";
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << c.id << ": " << o.detail << " (" << s << " s)\n";
  }
  std::cout << (failed ? "acceptance: FAILED\n" : "acceptance: all criteria pass\n");
  return failed ? 1 : 0;
}
