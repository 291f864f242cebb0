#include <random>

#include "cuspidal/gapfn.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cusp;
using testing_support::cs;
using testing_support::fn;

namespace {

std::vector<Int> values(const StepFunction& f, Int from, Int to) {
  std::vector<Int> out;
  for (Int m = from; m <= to; ++m) out.push_back(gap_function_eval(f, m));
  return out;
}

// A random gap list of a numerical semigroup with 2 or 3 generators.
StepFunction random_semigroup(std::mt19937& rng) {
  std::uniform_int_distribution<Int> pick(2, 11);
  std::vector<Int> gens{pick(rng), pick(rng)};
  if (rng() % 2) gens.push_back(pick(rng) + 5);
  Int g = 0;
  for (Int x : gens) g = std::gcd(g, x);
  if (g != 1) gens.push_back(gens[0] + 1);
  return StepFunction(oracle::gaps_by_combinations(gens, 150));
}

}  // namespace

TEST_CASE("gap function values printed for T(4,5) and T(2,9)") {
  CHECK(values(fn(cs(4, {5})), 0, 11) == std::vector<Int>{6, 6, 5, 4, 3, 3, 3, 2, 1, 1, 1, 1});
  CHECK(values(fn(cs(2, {9})), 0, 7) == std::vector<Int>{4, 4, 3, 3, 2, 2, 1, 1});
}

TEST_CASE("gap function tails") {
  const auto f = fn(cs(3, {7}));
  CHECK(gap_function_eval(f, 12) == 0);
  CHECK(gap_function_eval(f, 0) == 6);
  CHECK(gap_function_eval(f, -5) == 11);
  const StepFunction empty;
  CHECK(gap_function_eval(empty, 1) == 0);
  CHECK(gap_function_eval(empty, -3) == 3);
}

TEST_CASE("counting function") {
  const auto f = fn(cs(3, {7}));
  CHECK(counting_function_eval(f, 8) == 4);
  CHECK(counting_function_eval(f, 0) == 0);
  CHECK(counting_function_eval(f, 1) == 1);
  CHECK(counting_function_eval(f, -4) == 0);
  CHECK(counting_function_eval(f, 20) == 14);
}

TEST_CASE("StepFunction rejects malformed gap lists") {
  CHECK_THROWS_AS(StepFunction({0, 1}), Error);
  CHECK_THROWS_AS(StepFunction({2, 2}), Error);
}

TEST_CASE("R(m) = m - g + I(m) and the count of semigroup elements, randomized") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = random_semigroup(rng);
    const std::vector<Int> gaps(f.gaps().begin(), f.gaps().end());
    const Int mu = 2 * f.genus();
    for (Int m = -2 * mu - 3; m <= 2 * mu + 3; ++m) {
      CHECK(counting_function_eval(f, m) == m - f.genus() + gap_function_eval(f, m));
      CHECK(counting_function_eval(f, m) == oracle::count_fn(gaps, m));
      CHECK(gap_function_eval(f, m) == oracle::gap_fn(gaps, m));
    }
  }
}

TEST_CASE("convolution of I for the degree-6 pair") {
  const std::vector<StepFunction> fs{fn(cs(4, {5})), fn(cs(2, {9}))};
  CHECK(inf_convolve_I(fs, 1) == 10);
  CHECK(inf_convolve_I(fs, 7) == 6);
  CHECK(inf_convolve_I(fs, 13) == 3);
  CHECK(inf_convolve_I(fs, 19) == 1);
  for (Int m : {1, 7, 13, 19}) {
    CHECK(inf_convolve_R(fs, m) == m - 10 + inf_convolve_I(fs, m));
  }
}

TEST_CASE("convolution edge cases") {
  const auto f = fn(cs(3, {7}));
  const std::vector<StepFunction> one{f};
  CHECK(inf_convolve_I(one, 1) == 6);
  for (Int m = -5; m <= 30; ++m) CHECK(inf_convolve_R(one, m) == counting_function_eval(f, m));

  CHECK_THROWS_AS(inf_convolve_R({}, 3), Error);
  CHECK_THROWS_AS(inf_convolve_I({}, 3), Error);

  const std::vector<StepFunction> with_trivial{f, StepFunction{}};
  for (Int m = 0; m <= 25; ++m) {
    Int expected = std::numeric_limits<Int>::max();
    for (Int k = -2; k <= m + 2; ++k) {
      expected = std::min(expected, counting_function_eval(f, k) + std::max<Int>(m - k, 0));
    }
    CHECK(inf_convolve_R(with_trivial, m) == expected);
  }

  // Linear tails: I-convolution is g - m for m <= 0.
  const std::vector<StepFunction> three{fn(cs(2, {3})), fn(cs(2, {5})), fn(cs(3, {4}))};
  for (Int m = -8; m <= 0; ++m) CHECK(inf_convolve_I(three, m) == 6 - m);
}

TEST_CASE("I-convolution through R agrees with the direct min over splits") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    std::vector<StepFunction> fs;
    std::vector<std::vector<Int>> lists;
    for (std::size_t i = 0; i < n; ++i) {
      StepFunction f = random_semigroup(rng);
      if (f.genus() > 12) f = fn(cs(2, {2 * (1 + static_cast<Int>(rng() % 5)) + 1}));
      lists.emplace_back(f.gaps().begin(), f.gaps().end());
      fs.push_back(std::move(f));
    }
    for (Int m = -4; m <= 30; m += 3) {
      CHECK(inf_convolve_I(fs, m) == oracle::gap_convolution(lists, m));
    }
  }
}

TEST_CASE("convolution is commutative and associative") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_semigroup(rng);
    const auto b = random_semigroup(rng);
    const auto c = random_semigroup(rng);
    const Int upper = 60;
    const std::vector<StepFunction> abc{a, b, c};
    const std::vector<StepFunction> cab{c, a, b};
    const std::vector<StepFunction> bca{b, c, a};
    const CountingConvolution x(abc, upper);
    const CountingConvolution y(cab, upper);
    const CountingConvolution z(bca, upper);
    // (a <> b) <> c with the inner convolution tabulated separately
    const std::vector<StepFunction> ab{a, b};
    const CountingConvolution inner(ab, upper);
    for (Int m = 0; m <= upper; ++m) {
      CHECK(x.counting(m) == y.counting(m));
      CHECK(x.counting(m) == z.counting(m));
      Int nested = std::numeric_limits<Int>::max();
      for (Int k = 0; k <= m; ++k) nested = std::min(nested, inner.counting(k) + c.semigroup_count(m - k));
      CHECK(x.counting(m) == nested);
    }
  }
}

TEST_CASE("min-max identity max(x+y, z+w) = min_k max(x, z-k) + max(y, w+k)") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<Int> pick(-50, 50);
  for (int trial = 0; trial < 2000; ++trial) {
    const Int x = pick(rng), y = pick(rng), z = pick(rng), w = pick(rng);
    Int best = std::numeric_limits<Int>::max();
    for (Int k = -250; k <= 250; ++k) best = std::min(best, std::max(x, z - k) + std::max(y, w + k));
    CHECK(best == std::max(x + y, z + w));
  }
}

TEST_CASE("a tabulated single-factor convolution reproduces I") {
  const auto f = fn(cs(6, {14, 59}));
  const std::vector<StepFunction> one{f};
  const CountingConvolution conv(one, 200);
  for (Int m = -10; m <= 200; ++m) CHECK(conv.gap(m) == gap_function_eval(f, m));
}
