#include "cuspidal/gapfn.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cusp {

StepFunction::StepFunction(std::vector<Int> gaps) : gaps_(std::move(gaps)) {
  Int prev = 0;
  for (Int g : gaps_) {
    if (g <= prev) throw Error(ErrorCode::NotIncreasing, "gap list must be positive and strictly increasing");
    prev = g;
  }
}

StepFunction StepFunction::of(const CharSequence& cs) { return StepFunction(semigroup(cs).gaps); }

Int StepFunction::gap_count(Int m) const {
  const auto it = std::lower_bound(gaps_.begin(), gaps_.end(), m);
  const Int above = static_cast<Int>(gaps_.end() - it);
  return above + std::max<Int>(0, -m);
}

Int StepFunction::semigroup_count(Int m) const { return m - genus() + gap_count(m); }

Int gap_function_eval(const StepFunction& f, Int m) { return f.gap_count(m); }

Int counting_function_eval(const StepFunction& f, Int m) { return f.semigroup_count(m); }

CountingConvolution::CountingConvolution(std::span<const StepFunction> fs, Int upper) {
  if (fs.empty()) throw Error(ErrorCode::EmptyList, "infimum convolution of an empty list");
  upper = std::max<Int>(upper, 0);
  const auto size = static_cast<std::size_t>(upper + 1);
  factors_ = fs.size();

  table_.resize(size);
  for (std::size_t s = 0; s < size; ++s) table_[s] = fs[0].semigroup_count(static_cast<Int>(s));
  genus_ = fs[0].genus();

  std::vector<Int> factor(size);
  std::vector<Int> next(size);
  for (std::size_t i = 1; i < fs.size(); ++i) {
    genus_ += fs[i].genus();
    for (std::size_t s = 0; s < size; ++s) factor[s] = fs[i].semigroup_count(static_cast<Int>(s));
    for (std::size_t s = 0; s < size; ++s) {
      Int best = std::numeric_limits<Int>::max();
      for (std::size_t k = 0; k <= s; ++k) best = std::min(best, table_[k] + factor[s - k]);
      next[s] = best;
    }
    table_.swap(next);
  }
}

Int CountingConvolution::counting(Int m) const {
  if (m <= 0) return 0;
  if (m > upper()) {
    throw std::out_of_range("convolution evaluated at " + std::to_string(m) +
                            " beyond its table bound " + std::to_string(upper()));
  }
  return table_[static_cast<std::size_t>(m)];
}

Int inf_convolve_R(std::span<const StepFunction> fs, Int m) {
  if (fs.empty()) throw Error(ErrorCode::EmptyList, "infimum convolution of an empty list");
  if (fs.size() == 1) return fs[0].semigroup_count(m);
  return CountingConvolution(fs, m).counting(m);
}

Int inf_convolve_I(std::span<const StepFunction> fs, Int m) {
  if (fs.empty()) throw Error(ErrorCode::EmptyList, "infimum convolution of an empty list");
  Int genus = 0;
  for (const auto& f : fs) genus += f.genus();
  return inf_convolve_R(fs, m) + genus - m;
}

}  // namespace cusp
