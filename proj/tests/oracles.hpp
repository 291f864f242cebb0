#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the code paths they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

namespace oracle {

using Int = std::int64_t;

// Milnor number from the raw data, or -1 if (p; q) is not a valid
// characteristic sequence.
inline Int milnor_if_valid(Int p, const std::vector<Int>& q) {
  if (p < 2 || q.empty()) return -1;
  std::vector<Int> d{p};
  Int prev = p;
  for (Int x : q) {
    if (x <= prev || x % d.back() == 0) return -1;
    d.push_back(std::gcd(d.back(), x));
    prev = x;
  }
  if (d.back() != 1) return -1;
  Int mu = (p - 1) * (q[0] - 1);
  for (std::size_t i = 1; i < q.size(); ++i) mu += (d[i] - 1) * (q[i] - q[i - 1]);
  return mu;
}

// Every valid (p; q1 < ... < qn) with Milnor number mu, n <= max_terms,
// found by nested scanning of all increasing tuples below mu + 2.
inline std::vector<std::vector<Int>> scan_char_sequences(Int mu, std::size_t max_terms) {
  std::vector<std::vector<Int>> found;
  std::vector<Int> q;
  std::function<void(Int)> rec = [&](Int p) {
    if (!q.empty()) {
      if (milnor_if_valid(p, q) == mu) {
        std::vector<Int> row{p};
        row.insert(row.end(), q.begin(), q.end());
        found.push_back(row);
      }
    }
    if (q.size() == max_terms) return;
    const Int start = q.empty() ? p + 1 : q.back() + 1;
    for (Int x = start; x <= mu + 1; ++x) {
      // (p-1)(q1-1) alone must stay within mu.
      if ((p - 1) * ((q.empty() ? x : q.front()) - 1) > mu) break;
      q.push_back(x);
      rec(p);
      q.pop_back();
    }
  };
  for (Int p = 2; p <= mu + 1; ++p) rec(p);
  std::sort(found.begin(), found.end());
  return found;
}

// Elements of the semigroup generated by `gens` that are <= limit, by
// enumerating all non-negative combinations.
inline std::vector<char> semigroup_by_combinations(const std::vector<Int>& gens, Int limit) {
  std::vector<char> in(static_cast<std::size_t>(limit + 1), 0);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int sum) {
    if (i == gens.size()) {
      in[static_cast<std::size_t>(sum)] = 1;
      return;
    }
    for (Int s = sum; s <= limit; s += gens[i]) rec(i + 1, s);
  };
  rec(0, 0);
  return in;
}

inline std::vector<Int> gaps_by_combinations(const std::vector<Int>& gens, Int limit) {
  const auto in = semigroup_by_combinations(gens, limit);
  std::vector<Int> gaps;
  for (Int x = 1; x <= limit; ++x) {
    if (!in[static_cast<std::size_t>(x)]) gaps.push_back(x);
  }
  return gaps;
}

inline Int gap_fn(const std::vector<Int>& gaps, Int m) {
  Int c = m < 0 ? -m : 0;
  for (Int g : gaps) c += g >= m;
  return c;
}

inline Int count_fn(const std::vector<Int>& gaps, Int m) {
  if (m <= 0) return 0;
  Int c = 0;
  for (Int x = 0; x < m; ++x) c += std::find(gaps.begin(), gaps.end(), x) == gaps.end();
  return c;
}

// min over k_1 + ... + k_n = m with every k_i in [lo, hi] of sum f_i(k_i).
inline Int min_over_splits(const std::vector<std::function<Int(Int)>>& fs, Int m, Int lo, Int hi) {
  std::function<Int(std::size_t, Int)> rec = [&](std::size_t i, Int rest) -> Int {
    if (i + 1 == fs.size()) return (rest >= lo && rest <= hi) ? fs[i](rest) : std::numeric_limits<Int>::max() / 4;
    Int best = std::numeric_limits<Int>::max() / 4;
    for (Int k = lo; k <= hi; ++k) best = std::min(best, fs[i](k) + rec(i + 1, rest - k));
    return best;
  };
  return rec(0, m);
}

// Direct I_1 <> ... <> I_n over a window wide enough to contain a minimiser.
inline Int gap_convolution(const std::vector<std::vector<Int>>& gap_lists, Int m) {
  Int total = 0;
  for (const auto& g : gap_lists) total += static_cast<Int>(g.size()) + (g.empty() ? 0 : g.back());
  std::vector<std::function<Int(Int)>> fs;
  for (const auto& g : gap_lists) fs.push_back([&g](Int k) { return gap_fn(g, k); });
  const Int reach = std::abs(m) + total + 2;
  return min_over_splits(fs, m, -reach, reach);
}

struct Vertex {
  Int x;
  Int y;
};

// Type-A staircase vertices read straight off the alternating exponents.
inline std::vector<Vertex> a_vertices_from_exponents(const std::vector<Int>& n) {
  const Int g = n.back() / 2;
  std::vector<Vertex> out{{0, g}};
  Int x = 0;
  Int y = g;
  for (std::size_t i = 1; i < n.size(); ++i) {
    const Int step = n[i] - n[i - 1];
    if (i % 2 == 1) {
      x += step;
    } else {
      y -= step;
      out.push_back({x, y});
    }
  }
  return out;
}

// J of the tensor product, over every choice of one type-A vertex per factor.
inline Int j_tensor_vertices(const std::vector<std::vector<Vertex>>& factors, Int m) {
  Int best = std::numeric_limits<Int>::max();
  std::function<void(std::size_t, Int, Int)> rec = [&](std::size_t i, Int x, Int y) {
    if (i == factors.size()) {
      best = std::min(best, std::max(x, y - m));
      return;
    }
    for (const auto& v : factors[i]) rec(i + 1, x + v.x, y + v.y);
  };
  rec(0, 0, 0);
  return best;
}

// Dense polynomial helpers for the product formula
//   Delta(t) = (1 - t) prod_{i>=1} (1 - t^{n_i b_i}) / prod_{i>=0} (1 - t^{b_i}).
using Poly = std::vector<Int>;

inline Poly mul_binomial(const Poly& a, Int k) {  // a * (1 - t^k)
  Poly out(a.size() + static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] += a[i];
    out[i + static_cast<std::size_t>(k)] -= a[i];
  }
  return out;
}

inline Poly div_binomial(const Poly& a, Int k) {  // a / (1 - t^k), exact
  // c_i = a_i + c_{i-k}
  Poly c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    c[i] = a[i] + (i >= static_cast<std::size_t>(k) ? c[i - static_cast<std::size_t>(k)] : 0);
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

inline std::vector<Int> alexander_exponents_by_product(const std::vector<Int>& gens, const std::vector<Int>& ratios) {
  Poly p{1};
  p = mul_binomial(p, 1);
  for (std::size_t i = 1; i < gens.size(); ++i) p = mul_binomial(p, ratios[i - 1] * gens[i]);
  for (Int b : gens) p = div_binomial(p, b);
  std::vector<Int> exps;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) exps.push_back(static_cast<Int>(i));
  }
  return exps;
}

}  // namespace oracle
