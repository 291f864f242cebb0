#include "cuspidal/staircase.hpp"

#include <algorithm>
#include <limits>

namespace cusp {

Staircase Staircase::from_alexander(const AlexanderPoly& poly) {
  Staircase st(poly);
  const auto e = poly.exponents();
  st.genus_ = poly.genus();
  for (std::size_t i = 0; i + 1 < e.size(); ++i) st.steps_.push_back(e[i + 1] - e[i]);

  Int x = 0;
  Int y = st.genus_;
  st.vertices_.push_back({VertexType::A, x, y, 0});
  for (std::size_t k = 0; k < st.steps_.size(); ++k) {
    if (k % 2 == 0) {
      x += st.steps_[k];
      st.vertices_.push_back({VertexType::B, x, y, 1});
    } else {
      y -= st.steps_[k];
      st.vertices_.push_back({VertexType::A, x, y, 0});
    }
  }
  return st;
}

std::vector<StaircaseVertex> Staircase::a_vertices() const {
  std::vector<StaircaseVertex> out;
  for (const auto& v : vertices_) {
    if (v.type == VertexType::A) out.push_back(v);
  }
  return out;
}

Staircase staircase_from_alexander(const AlexanderPoly& poly) { return Staircase::from_alexander(poly); }

Int j_function(const Staircase& knot, Int m) {
  Int best = std::numeric_limits<Int>::max();
  for (const auto& v : knot.vertices()) {
    if (v.type != VertexType::A) continue;
    best = std::min(best, std::max(v.i, v.j - m));
  }
  return best;
}

Int j_function(std::span<const Staircase> knots, Int m) {
  if (knots.empty()) throw Error(ErrorCode::EmptyList, "J-function of an empty connected sum");
  if (knots.size() == 1) return j_function(knots[0], m);
  std::vector<StepFunction> fs;
  fs.reserve(knots.size());
  for (const auto& k : knots) fs.emplace_back(gaps_from_alexander(k.alexander()));
  Int genus = 0;
  for (const auto& f : fs) genus += f.genus();
  return inf_convolve_I(fs, m + genus);
}

std::vector<JStep> j_growth_profile(const Staircase& knot) {
  std::vector<JStep> out;
  const Int g = knot.genus();
  for (Int m = -g; m <= g; ++m) out.push_back({m, j_function(knot, m + 1) - j_function(knot, m)});
  return out;
}

Rational d_invariant(std::span<const StepFunction> knots, Int q, Int m) {
  if (knots.empty()) throw Error(ErrorCode::EmptyList, "d-invariant of an empty connected sum");
  Int genus = 0;
  for (const auto& f : knots) genus += f.genus();
  if (q <= 2 * genus - 1) {
    throw Error(ErrorCode::SurgeryTooSmall, "surgery coefficient " + std::to_string(q) +
                                                " <= 2g - 1 = " + std::to_string(2 * genus - 1));
  }
  if (2 * m > q || 2 * m < -q) {
    throw Error(ErrorCode::SpinCOutOfRange, "Spin^c label " + std::to_string(m) + " outside [-q/2, q/2] for q = " +
                                                std::to_string(q));
  }
  std::vector<Staircase> stairs;
  stairs.reserve(knots.size());
  for (const auto& f : knots) stairs.push_back(Staircase::from_alexander(alexander_from_gaps(f.gaps())));
  const Int j = j_function(stairs, m);
  const Int shift = q - 2 * m;
  return Rational(-2 * j) + Rational(shift * shift - q, 4 * q);
}

std::vector<Int> extendable_spinc(Int d) {
  std::vector<Int> out;
  if (d < 1) return out;
  if (d % 2 == 1) {
    for (Int k = -(d / 2); k <= d / 2; ++k) out.push_back(k * d);
  } else {
    // k odd with |k| <= d; k = +-d is even, so the endpoints +-d^2/2 never occur.
    for (Int k = -(d - 1); k <= d - 1; k += 2) out.push_back(k * d / 2);
  }
  return out;
}

}  // namespace cusp
