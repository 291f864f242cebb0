#pragma once

// Exhaustive single-cusp surveys over ranges of degrees.

#include <atomic>
#include <optional>
#include <vector>

#include "cuspidal/criteria.hpp"
#include "cuspidal/singularity.hpp"

namespace cusp {

/// Shared progress counter. Workers add the number of candidates they have
/// finished; readers may poll it from another thread.
class ProgressCounter {
 public:
  void add(Int n) noexcept { done_.fetch_add(n, std::memory_order_relaxed); }
  Int done() const noexcept { return done_.load(std::memory_order_relaxed); }

 private:
  std::atomic<Int> done_{0};
};

struct SurveyOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// Bound on the number of characteristic terms; 0 means unbounded.
  std::size_t max_terms = 4;
  ProgressCounter* progress = nullptr;
};

struct DegreeTally {
  Int degree = 0;
  Int candidates = 0;
  Int pass_semigroup = 0;
  /// Candidates passing the Orevkov bound, regardless of the semigroup check.
  Int pass_orevkov = 0;
  /// Semigroup passers that also pass the Orevkov bound.
  Int pass_both = 0;
  /// Semigroup passers, in lexicographic order.
  std::vector<CharSequence> passing;
};

struct SurveyResult {
  Int d_min = 0;
  Int d_max = 0;
  Int total_candidates = 0;
  Int pass_semigroup = 0;
  Int pass_orevkov = 0;
  Int pass_both = 0;
  std::vector<DegreeTally> per_degree;

  std::vector<CharSequence> passing() const;
};

/// All characteristic sequences with mu = (d-1)(d-2), d in [d_min, d_max],
/// checked as the unique cusp of a degree-d curve. Results do not depend on
/// the worker count.
SurveyResult survey_single_cusp(Int d_min, Int d_max, const SurveyOptions& options = {});

/// Coprime a < b with (a-1)(b-1) = (d-1)(d-2), checked as the torus type
/// (a;b) on a degree-d curve. max_terms is ignored.
SurveyResult survey_coprime_pairs(Int d_min, Int d_max, const SurveyOptions& options = {});

struct TableRow {
  CharSequence sequence;
  Verdict verdict;
  std::optional<Int> first_fail;
};

/// Every characteristic sequence with mu = (d-1)(d-2) and its semigroup
/// verdict as the unique cusp of a degree-d curve, in lexicographic order.
std::vector<TableRow> table_degree(Int d, std::size_t max_terms = 0);

/// Rough number of single-cusp candidates in [d_min, d_max]; used to gate
/// long runs. Counts grow roughly like d^4.5.
Int estimated_single_cusp_candidates(Int d_min, Int d_max);

/// A known rational cuspidal curve of degree d with one cusp of torus type (a;b).
struct KnownCurve {
  Int degree;
  Int a;
  Int b;
  const char* family;
};

/// The one-Puiseux-pair unicuspidal curves of degree <= d_max:
/// (d-1; d); (d/2; 2d-1) for even d; (phi_{j-2}; phi_{j+2}) in degree phi_j
/// for odd j >= 7; (phi_{j-2}^2; phi_j^2) in degree phi_{j-1}^2 + 1 for odd
/// j >= 5; and the sporadic (3;22) in degree 8 and (6;43) in degree 16.
std::vector<KnownCurve> known_unicuspidal_curves(Int d_max);

bool is_known_unicuspidal(Int a, Int b, Int d);

}  // namespace cusp
