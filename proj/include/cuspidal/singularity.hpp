#pragma once

// Characteristic sequences (p; q1, ..., qn) of unibranched plane-curve
// singular points, and the invariants derived from them.

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cuspidal/error.hpp"

namespace cusp {

/// A validated characteristic sequence. Construct through validate() or parse().
///
/// Invariants: p >= 2, p < q1 < ... < qn, with D_i = gcd(p, q1, ..., qi)
/// strictly decreasing from D_0 = p (D_{i-1} never divides q_i) and D_n = 1.
class CharSequence {
 public:
  static CharSequence validate(Int p, std::vector<Int> q);

  /// Parses "p;q1,q2,..." (whitespace tolerated) and validates the result.
  static CharSequence parse(std::string_view spec);

  Int multiplicity() const noexcept { return p_; }
  std::span<const Int> terms() const noexcept { return q_; }
  /// D_1, ..., D_n.
  std::span<const Int> gcd_chain() const noexcept { return gcds_; }
  std::size_t num_terms() const noexcept { return q_.size(); }

  /// "(p;q1,q2,...)"
  std::string to_string() const;
  /// "p;q1,q2,..." (the CLI cusp-spec form)
  std::string to_spec() const;

  friend bool operator==(const CharSequence&, const CharSequence&) = default;
  friend std::strong_ordering operator<=>(const CharSequence& a, const CharSequence& b);

 private:
  CharSequence(Int p, std::vector<Int> q, std::vector<Int> gcds)
      : p_(p), q_(std::move(q)), gcds_(std::move(gcds)) {}

  Int p_;
  std::vector<Int> q_;
  std::vector<Int> gcds_;
};

struct SemigroupData {
  std::vector<Int> generators;
  std::vector<Int> gaps;
  Int genus = 0;
  Int milnor = 0;
};

/// mu = (p-1)(q1-1) + sum_{i>=2} (D_{i-1} - 1)(q_i - q_{i-1}).
///
/// Some references print the second factor's gcd as D_i; that form gives an
/// odd mu for (4;6,7), which cannot equal twice the number of gaps.
Int milnor_number(const CharSequence& cs);

/// Minimal generators of the semigroup of the branch:
///   b0 = p, b1 = q1, b_{i+1} = (D_{i-1}/D_i) b_i + q_{i+1} - q_i.
std::vector<Int> semigroup_generators(const CharSequence& cs);

/// Membership table of the numerical semigroup generated by `generators`
/// on [0, limit].
std::vector<char> semigroup_membership(std::span<const Int> generators, Int limit);

/// Generators, gap sequence, genus and Milnor number. Throws
/// InternalInconsistency if the sieved gap set disagrees with milnor_number().
SemigroupData semigroup(const CharSequence& cs);

/// Calls `visit` for every characteristic sequence with Milnor number `mu`
/// and multiplicity `p`, in lexicographic order. `max_terms` == 0 means no
/// bound on the number of terms.
void for_each_char_sequence_with_multiplicity(
    Int mu, Int p, std::size_t max_terms, const std::function<void(const CharSequence&)>& visit);

/// Largest multiplicity that can occur at Milnor number `mu`.
Int max_multiplicity_for_milnor(Int mu);

/// Every characteristic sequence with Milnor number exactly `mu`, in
/// lexicographic order of (p, q1, ..., qn). Throws OddMilnor for odd mu.
std::vector<CharSequence> enumerate_char_sequences(Int mu, std::size_t max_terms = 0);

}  // namespace cusp
