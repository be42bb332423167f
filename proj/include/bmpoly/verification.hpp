#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bmpoly/boros_moll.hpp"
#include "bmpoly/row_cache.hpp"

namespace bmpoly {

enum class ClaimId {
  coeff_identities,
  poly_recurrences,
  liu_wang_sides,
  sturm_sequence_q,
  sturm_sequence_r,
  klogconcave,
  branden_transform,
};

inline constexpr ClaimId kAllClaims[] = {
    ClaimId::coeff_identities, ClaimId::poly_recurrences, ClaimId::liu_wang_sides, ClaimId::sturm_sequence_q,
    ClaimId::sturm_sequence_r, ClaimId::klogconcave,      ClaimId::branden_transform,
};

std::string_view to_string(ClaimId claim);
std::optional<ClaimId> parse_claim(std::string_view text);

enum class Status { pass, fail };

std::string_view to_string(Status status);

struct FailureRecord {
  long n = 0;
  std::string detail;
  std::vector<std::string> values;  // rationals in "num/den" form

  friend bool operator==(const FailureRecord&, const FailureRecord&) = default;
};

struct NTiming {
  long n = 0;
  double ms = 0.0;
};

/// Evidence for one claim over an inclusive range of n. status is pass iff
/// failures is empty. Notes carry non-failing observations (expected-fail
/// base cases, directly verified base cases, scope remarks).
struct VerificationReport {
  ClaimId claim = ClaimId::coeff_identities;
  long n_lo = 0;
  long n_hi = 0;
  Status status = Status::pass;
  std::vector<FailureRecord> failures;
  std::vector<std::string> notes;
  std::vector<NTiming> timing;

  bool passed() const { return status == Status::pass; }
};

struct VerifyOptions {
  /// Rows are read from here when set; otherwise a private cache is used.
  RowCache* cache = nullptr;
  /// Worker threads for per-n checks. Reports do not depend on it.
  unsigned jobs = 1;
};

/// Condition (ii) of the Liu-Wang criterion for the shapes used here
/// (b of degree <= 1, c constant): for every x <= 0, b(x) <= 0 and c <= 0,
/// and b(x), c are not both zero. Throws ShapeError on other shapes.
bool check_liu_wang_side_conditions(const RecurrenceCoeffs& coeffs);

/// rec1, rec2, the Q-coefficient identity, rec1 solved for d_{i-1}(n), and
/// rec2 shifted down by one, at every valid (n, i) whose rows lie in 0..n_max.
VerificationReport verify_coefficient_identities(unsigned n_max, const VerifyOptions& opts = {});

/// Q_n and R_n from their three-term recurrences equal the direct
/// constructions for every n <= n_max.
VerificationReport verify_polynomial_recurrences(unsigned n_max, const VerifyOptions& opts = {});

/// Side conditions at every 1 <= n <= n_max. Family R is expected to fail at
/// n = 1, 2 (recorded as notes) and to pass from n = 3; Q passes from n = 1.
/// Without a family both are checked.
VerificationReport verify_liu_wang(unsigned n_max, std::optional<FamilyId> family = std::nullopt,
                                   const VerifyOptions& opts = {});

/// {F_n} is a Sturm sequence for n <= n_max: degree n, positive coefficients,
/// real-rooted, F_{n-1} strictly interlacing F_n. Also cross-checks each
/// Liu-Wang inductive step inside the range.
VerificationReport verify_sturm_sequence(FamilyId family, unsigned n_max, const VerifyOptions& opts = {});

/// L^1..L^k of every row 0..n_max are nonnegative.
VerificationReport verify_k_logconcavity(unsigned n_max, unsigned k, const VerifyOptions& opts = {});

/// Seeded random f = prod (x + r_i), r_i >= 0 rational, 1 <= deg <= max_deg:
/// the L transform of every sample is real-rooted.
VerificationReport branden_random_property(unsigned trials, unsigned max_deg, std::uint64_t seed,
                                           const VerifyOptions& opts = {});

/// Nonnegative rational roots of the samples used by branden_random_property.
std::vector<std::vector<Rational>> branden_samples(unsigned trials, unsigned max_deg, std::uint64_t seed);

struct ReportConfig {
  unsigned n_max = 40;
  unsigned k = 3;
  unsigned trials = 200;
  unsigned max_deg = 12;
  std::uint64_t seed = 42;
};

/// Every claim in kAllClaims order.
std::vector<VerificationReport> run_all_claims(const ReportConfig& config, const VerifyOptions& opts = {});

}  // namespace bmpoly
