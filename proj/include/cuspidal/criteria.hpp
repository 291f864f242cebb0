#pragma once

// Obstructions to a configuration of cusps lying on a rational cuspidal
// curve of degree d.

#include <optional>
#include <string>
#include <vector>

#include "cuspidal/singularity.hpp"

namespace cusp {

struct CurveConfig {
  Int degree = 0;
  /// Sorted so that multiplicities are non-increasing.
  std::vector<CharSequence> cusps;

  /// Sorts the cusps (stable, by decreasing multiplicity). Throws
  /// EmptyList when `cusps` is empty and std::invalid_argument for d < 1.
  static CurveConfig make(Int degree, std::vector<CharSequence> cusps);

  Int total_genus() const;
};

enum class Verdict { Pass, Fail, Inapplicable };

std::string_view to_string(Verdict v);

struct CriterionRow {
  Int j;
  Int actual;
  Int expected;

  bool ok() const noexcept { return actual == expected; }
  friend bool operator==(const CriterionRow&, const CriterionRow&) = default;
};

struct CriterionReport {
  std::string criterion;
  Verdict verdict = Verdict::Inapplicable;
  std::vector<CriterionRow> details;
  std::optional<Int> first_fail;
  /// Human-readable account for checks that are inequalities rather than
  /// per-j equalities.
  std::string note;

  bool passed() const noexcept { return verdict == Verdict::Pass; }
  std::vector<Int> failing_j() const;
};

/// Sum of the cusp genera against (d-1)(d-2)/2.
CriterionReport genus_compatibility(const CurveConfig& cfg);

/// (R_1 <> ... <> R_n)(jd + 1) = (j+1)(j+2)/2 for j = -1, ..., d-2, with
/// every j recorded. The I-form (I_1 <> ... <> I_n)(jd+1) = (j-d+1)(j-d+2)/2
/// is evaluated alongside and must fail at exactly the same j.
/// Inapplicable when genus compatibility fails.
CriterionReport semigroup_distribution(const CurveConfig& cfg);

/// One cusp only: k_{jd} = (d-j-2)(d-j-1)/2 for j = 0, ..., d-3, with k the
/// (t-1)^2 coefficients of the Alexander polynomial. Rows are indexed like
/// semigroup_distribution (the coefficient k_{d(d-i-3)} sits at j = d-3-i).
/// Throws MultipleCusps for more than one cusp.
CriterionReport coefficient_check_single_cusp(const CurveConfig& cfg);

/// 3 p_1 > d.
CriterionReport matsuoka_sakai(const CurveConfig& cfg);

/// alpha (p_1 + 1) + 1/sqrt(5) > d with alpha = (3 + sqrt 5)/2, decided in
/// exact integer arithmetic.
CriterionReport orevkov_bound(const CurveConfig& cfg);

/// True iff alpha (p + 1) + 1/sqrt(5) > d.
bool orevkov_inequality(Int p, Int d);

/// If 2 p_i > d + n - 1 then q_{i1} <= d + n - 1. Inapplicable when no cusp
/// meets the hypothesis.
CriterionReport strong_multiplicity(const CurveConfig& cfg);

/// Single-cusp fast screen: the first j in [0, d-3] at which
/// R(jd + 1) != (j+1)(j+2)/2, or nullopt when all hold. Sieves the semigroup
/// only as far as needed. Assumes mu(cs) = (d-1)(d-2).
std::optional<Int> first_semigroup_failure(const CharSequence& cs, Int d);

}  // namespace cusp
