#pragma once

// Alexander polynomials of L-space knots, kept in the alternating form
//   Delta(t) = sum_{i=0}^{2m} (-1)^i t^{n_i},   0 = n_0 < n_1 < ... < n_{2m}.

#include <span>
#include <vector>

#include "cuspidal/error.hpp"

namespace cusp {

class AlexanderPoly {
 public:
  /// Validates the exponent list: odd length, n_0 = 0, strictly increasing,
  /// symmetric under n -> n_{2m} - n.
  static AlexanderPoly from_exponents(std::vector<Int> exponents);

  std::span<const Int> exponents() const noexcept { return exponents_; }
  Int degree() const noexcept { return exponents_.back(); }
  /// Half the degree.
  Int genus() const noexcept { return exponents_.back() / 2; }

  /// Sign of the t^e coefficient: +1, -1 or 0.
  int coefficient(Int e) const;
  /// Delta evaluated at an integer point (exact; small |t| only).
  Int evaluate(Int t) const;

  friend bool operator==(const AlexanderPoly&, const AlexanderPoly&) = default;

 private:
  explicit AlexanderPoly(std::vector<Int> e) : exponents_(std::move(e)) {}
  std::vector<Int> exponents_;
};

/// Expands 1 + (t - 1) sum_j t^{g_j}. Each maximal run of consecutive gaps
/// [a, b] telescopes to t^{b+1} - t^a. Throws NotAlternating when G is not a
/// positive increasing list and NotSymmetric when the result is not the
/// polynomial of an L-space knot.
AlexanderPoly alexander_from_gaps(std::span<const Int> gaps);

/// Inverse of alexander_from_gaps: G is the union of [n_{2i-1}, n_{2i} - 1].
std::vector<Int> gaps_from_alexander(const AlexanderPoly& poly);

/// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)) by exact dense polynomial
/// arithmetic. Throws NotCoprime unless p, q >= 2 are coprime.
AlexanderPoly torus_alexander(Int p, Int q);

/// k_0, ..., k_{2g-2} in Delta = 1 + g (t - 1) + (t - 1)^2 sum_j k_j t^j.
/// Empty for the unknot.
std::vector<Int> k_coefficients(const AlexanderPoly& poly);

}  // namespace cusp
