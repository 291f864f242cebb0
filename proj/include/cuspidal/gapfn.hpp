#pragma once

// Gap function I and counting function R of a gap sequence, and their
// infimum convolution (f <> g)(s) = min_k f(k) + g(s - k).

#include <span>
#include <vector>

#include "cuspidal/error.hpp"
#include "cuspidal/singularity.hpp"

namespace cusp {

/// One gap list G backing both
///   I(m) = #{k in G or k < 0 : k >= m}
///   R(m) = m - g + I(m)   (= #{s in S : 0 <= s < m} for m >= 0)
class StepFunction {
 public:
  StepFunction() = default;
  /// `gaps` must be strictly increasing and positive (NotIncreasing otherwise).
  explicit StepFunction(std::vector<Int> gaps);

  static StepFunction of(const CharSequence& cs);

  std::span<const Int> gaps() const noexcept { return gaps_; }
  Int genus() const noexcept { return static_cast<Int>(gaps_.size()); }
  /// Largest gap, or 0 when G is empty.
  Int conductor_bound() const noexcept { return gaps_.empty() ? 0 : gaps_.back(); }

  Int gap_count(Int m) const;
  Int semigroup_count(Int m) const;

 private:
  std::vector<Int> gaps_;
};

Int gap_function_eval(const StepFunction& f, Int m);
Int counting_function_eval(const StepFunction& f, Int m);

/// Tabulated R_1 <> ... <> R_n on [0, upper], for repeated evaluation.
///
/// Every R_i vanishes on (-inf, 0] and is non-decreasing, so the minimum over
/// splits k_1 + ... + k_n = m with k_i >= -1 is already attained with every
/// k_i in [0, m]; the table is built by iterated binary convolution on that
/// window.
class CountingConvolution {
 public:
  CountingConvolution(std::span<const StepFunction> fs, Int upper);

  /// (R_1 <> ... <> R_n)(m). Zero for m <= 0; m must not exceed upper().
  Int counting(Int m) const;
  /// (I_1 <> ... <> I_n)(m) = R-convolution + g - m with g the total genus.
  Int gap(Int m) const { return counting(m) + genus_ - m; }

  Int upper() const noexcept { return static_cast<Int>(table_.size()) - 1; }
  Int genus() const noexcept { return genus_; }
  std::size_t factors() const noexcept { return factors_; }

 private:
  std::vector<Int> table_;
  Int genus_ = 0;
  std::size_t factors_ = 0;
};

/// (R_1 <> ... <> R_n)(m). Throws EmptyList for an empty list.
Int inf_convolve_R(std::span<const StepFunction> fs, Int m);

/// (I_1 <> ... <> I_n)(m), through inf_convolve_R and the linear shift
/// R-conv(m) = m - g + I-conv(m).
Int inf_convolve_I(std::span<const StepFunction> fs, Int m);

}  // namespace cusp
