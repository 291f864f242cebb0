#pragma once

#include <random>
#include <vector>

#include "cuspidal/gapfn.hpp"
#include "cuspidal/singularity.hpp"

namespace testing_support {

using cusp::CharSequence;
using cusp::Int;

inline CharSequence cs(Int p, std::vector<Int> q) { return CharSequence::validate(p, std::move(q)); }

inline std::vector<Int> gaps_of(const CharSequence& c) { return cusp::semigroup(c).gaps; }

inline cusp::StepFunction fn(const CharSequence& c) { return cusp::StepFunction::of(c); }

/// Every characteristic sequence with Milnor number at most `max_mu`.
inline std::vector<CharSequence> all_cusps_up_to(Int max_mu, std::size_t max_terms = 0) {
  std::vector<CharSequence> out;
  for (Int mu = 2; mu <= max_mu; mu += 2) {
    auto v = cusp::enumerate_char_sequences(mu, max_terms);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace testing_support
