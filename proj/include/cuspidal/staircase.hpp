#pragma once

// Staircase complexes of L-space knots, the J-function, and d-invariants of
// large surgeries.

#include <span>
#include <vector>

#include "cuspidal/alexander.hpp"
#include "cuspidal/gapfn.hpp"
#include "cuspidal/rational.hpp"

namespace cusp {

enum class VertexType { A, B };

struct StaircaseVertex {
  VertexType type;
  Int i;
  Int j;
  int grading;  // 0 for type A, 1 for type B

  friend bool operator==(const StaircaseVertex&, const StaircaseVertex&) = default;
};

/// St(v): alternating right/down steps from (0, g) to (g, 0). Only the
/// vertices are kept; the differentials are never needed.
class Staircase {
 public:
  static Staircase from_alexander(const AlexanderPoly& poly);

  std::span<const Int> steps() const noexcept { return steps_; }
  std::span<const StaircaseVertex> vertices() const noexcept { return vertices_; }
  /// Type-A vertices, ordered by increasing first coordinate.
  std::vector<StaircaseVertex> a_vertices() const;
  Int genus() const noexcept { return genus_; }
  const AlexanderPoly& alexander() const noexcept { return poly_; }

 private:
  Staircase(AlexanderPoly poly) : poly_(std::move(poly)) {}

  AlexanderPoly poly_;
  Int genus_ = 0;
  std::vector<Int> steps_;
  std::vector<StaircaseVertex> vertices_;
};

Staircase staircase_from_alexander(const AlexanderPoly& poly);

/// J(m) = min over type-A vertices v of max(v_i, v_j - m) for one staircase.
Int j_function(const Staircase& knot, Int m);

/// J of the connected sum. For several factors this goes through the
/// infimum convolution: J(m) = (I_1 <> ... <> I_n)(m + g).
Int j_function(std::span<const Staircase> knots, Int m);

struct JStep {
  Int m;
  /// J(m+1) - J(m), either 0 or -1.
  Int step;
};

/// J(m+1) - J(m) for m in [-g, g].
std::vector<JStep> j_growth_profile(const Staircase& knot);

/// d(S^3_q(K), s_m) = -2 J(m) + ((q - 2m)^2 - q) / 4q for K the connected sum
/// of knots with the given gap functions. Requires q > 2g - 1 and
/// -q/2 <= m <= q/2.
Rational d_invariant(std::span<const StepFunction> knots, Int q, Int m);

/// Labels m of the Spin^c structures on S^3_{d^2} that extend over the
/// complement of a degree-d curve: m = kd, |k| <= d/2, for odd d, and
/// m = kd/2 with k odd, |k| <= d, for even d. Sorted ascending.
std::vector<Int> extendable_spinc(Int d);

}  // namespace cusp
