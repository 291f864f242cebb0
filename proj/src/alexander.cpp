#include "cuspidal/alexander.hpp"

#include <algorithm>
#include <numeric>

namespace cusp {

namespace {

using Dense = std::vector<Int>;  // coefficient of t^i at index i

// Exact division by the monic polynomial t^k - 1.
Dense divide_by_binomial(const Dense& num, Int k) {
  Dense rem = num;
  const auto deg = static_cast<Int>(num.size()) - 1;
  Dense quot(static_cast<std::size_t>(deg - k + 1), 0);
  for (Int i = deg; i >= k; --i) {
    const Int c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - k)] = c;
    rem[static_cast<std::size_t>(i)] = 0;
    rem[static_cast<std::size_t>(i - k)] += c;
  }
  for (Int i = 0; i < k; ++i) {
    if (rem[static_cast<std::size_t>(i)] != 0) {
      throw Error(ErrorCode::InternalInconsistency, "t^k - 1 does not divide the numerator");
    }
  }
  return quot;
}

AlexanderPoly from_dense(const Dense& coeffs) {
  std::vector<Int> exps;
  int expected = 1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (coeffs[i] != expected) {
      throw Error(ErrorCode::NotAlternating, "coefficient of t^" + std::to_string(i) + " is " +
                                                 std::to_string(coeffs[i]));
    }
    exps.push_back(static_cast<Int>(i));
    expected = -expected;
  }
  return AlexanderPoly::from_exponents(std::move(exps));
}

}  // namespace

AlexanderPoly AlexanderPoly::from_exponents(std::vector<Int> exponents) {
  if (exponents.empty() || exponents.size() % 2 == 0 || exponents.front() != 0) {
    throw Error(ErrorCode::NotAlternating,
                "exponent list must have odd length and start at 0");
  }
  for (std::size_t i = 1; i < exponents.size(); ++i) {
    if (exponents[i] <= exponents[i - 1]) {
      throw Error(ErrorCode::NotAlternating, "exponents must be strictly increasing");
    }
  }
  const Int top = exponents.back();
  for (std::size_t i = 0, j = exponents.size() - 1; i < exponents.size(); ++i, --j) {
    if (exponents[i] + exponents[j] != top) {
      throw Error(ErrorCode::NotSymmetric, "exponents are not symmetric about " + std::to_string(top) + "/2");
    }
  }
  return AlexanderPoly(std::move(exponents));
}

int AlexanderPoly::coefficient(Int e) const {
  const auto it = std::lower_bound(exponents_.begin(), exponents_.end(), e);
  if (it == exponents_.end() || *it != e) return 0;
  return (it - exponents_.begin()) % 2 == 0 ? 1 : -1;
}

Int AlexanderPoly::evaluate(Int t) const {
  Int total = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    Int power = 1;
    for (Int k = 0; k < exponents_[i]; ++k) power *= t;
    total += i % 2 == 0 ? power : -power;
  }
  return total;
}

AlexanderPoly alexander_from_gaps(std::span<const Int> gaps) {
  std::vector<Int> exps{0};
  Int prev = 0;
  std::size_t i = 0;
  while (i < gaps.size()) {
    if (gaps[i] <= prev) {
      throw Error(ErrorCode::NotAlternating, "gap list must be positive and strictly increasing");
    }
    const Int start = gaps[i];
    while (i + 1 < gaps.size() && gaps[i + 1] == gaps[i] + 1) ++i;
    exps.push_back(start);          // -t^a
    exps.push_back(gaps[i] + 1);    // +t^{b+1}
    prev = gaps[i];
    ++i;
  }
  auto poly = AlexanderPoly::from_exponents(std::move(exps));
  if (poly.degree() != 2 * static_cast<Int>(gaps.size())) {
    throw Error(ErrorCode::NotSymmetric, "degree " + std::to_string(poly.degree()) +
                                             " differs from twice the gap count");
  }
  return poly;
}

std::vector<Int> gaps_from_alexander(const AlexanderPoly& poly) {
  const auto e = poly.exponents();
  std::vector<Int> gaps;
  for (std::size_t i = 1; i + 1 < e.size(); i += 2) {
    for (Int g = e[i]; g < e[i + 1]; ++g) gaps.push_back(g);
  }
  return gaps;
}

AlexanderPoly torus_alexander(Int p, Int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) {
    throw Error(ErrorCode::NotCoprime, "T(" + std::to_string(p) + "," + std::to_string(q) +
                                           ") needs coprime p, q >= 2");
  }
  // (t^{pq} - 1)(t - 1) = t^{pq+1} - t^{pq} - t + 1
  Dense num(static_cast<std::size_t>(p * q + 2), 0);
  num[static_cast<std::size_t>(p * q + 1)] += 1;
  num[static_cast<std::size_t>(p * q)] -= 1;
  num[1] -= 1;
  num[0] += 1;
  return from_dense(divide_by_binomial(divide_by_binomial(num, p), q));
}

std::vector<Int> k_coefficients(const AlexanderPoly& poly) {
  // t^g = 1 + (t - 1)(1 + t + ... + t^{g-1}), so each gap g adds one to k_0..k_{g-1}.
  const auto gaps = gaps_from_alexander(poly);
  if (gaps.empty()) return {};
  const Int len = 2 * poly.genus() - 1;
  std::vector<Int> k(static_cast<std::size_t>(len), 0);
  for (Int g : gaps) {
    for (Int j = 0; j < g && j < len; ++j) ++k[static_cast<std::size_t>(j)];
  }
  return k;
}

}  // namespace cusp
