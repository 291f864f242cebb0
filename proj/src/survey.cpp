#include "cuspidal/survey.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>
#include <tuple>

namespace cusp {

namespace {

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs body(i) for i in [0, n) on `workers` threads, handing out indices in
// order. Each index writes only its own output slot.
template <class Body>
void parallel_for(std::size_t n, unsigned workers, Body body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  }
}

struct WorkItem {
  Int degree;
  Int multiplicity;
};

struct ItemResult {
  Int candidates = 0;
  Int pass_orevkov = 0;
  Int pass_both = 0;
  std::vector<CharSequence> passing;
};

SurveyResult merge(Int d_min, Int d_max, const std::vector<WorkItem>& items,
                   std::vector<ItemResult>& results) {
  SurveyResult out;
  out.d_min = d_min;
  out.d_max = d_max;
  for (Int d = d_min; d <= d_max; ++d) out.per_degree.push_back(DegreeTally{d, 0, 0, 0, 0, {}});
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto& tally = out.per_degree[static_cast<std::size_t>(items[i].degree - d_min)];
    auto& r = results[i];
    tally.candidates += r.candidates;
    tally.pass_orevkov += r.pass_orevkov;
    tally.pass_both += r.pass_both;
    tally.pass_semigroup += static_cast<Int>(r.passing.size());
    for (auto& cs : r.passing) tally.passing.push_back(std::move(cs));
  }
  for (const auto& t : out.per_degree) {
    out.total_candidates += t.candidates;
    out.pass_semigroup += t.pass_semigroup;
    out.pass_orevkov += t.pass_orevkov;
    out.pass_both += t.pass_both;
  }
  return out;
}

void screen(const CharSequence& cs, Int d, ItemResult& r) {
  ++r.candidates;
  const bool orevkov = orevkov_inequality(cs.multiplicity(), d);
  r.pass_orevkov += orevkov;
  if (!first_semigroup_failure(cs, d)) {
    r.pass_both += orevkov;
    r.passing.push_back(cs);
  }
}

Int fibonacci(int n) {
  Int a = 0;
  Int b = 1;
  for (int i = 0; i < n; ++i) {
    const Int t = a + b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

std::vector<CharSequence> SurveyResult::passing() const {
  std::vector<CharSequence> out;
  for (const auto& t : per_degree) out.insert(out.end(), t.passing.begin(), t.passing.end());
  return out;
}

SurveyResult survey_single_cusp(Int d_min, Int d_max, const SurveyOptions& options) {
  std::vector<WorkItem> items;
  for (Int d = std::max<Int>(d_min, 3); d <= d_max; ++d) {
    const Int mu = (d - 1) * (d - 2);
    const Int pmax = max_multiplicity_for_milnor(mu);
    for (Int p = 2; p <= pmax; ++p) items.push_back({d, p});
  }
  std::vector<ItemResult> results(items.size());
  parallel_for(items.size(), resolve_workers(options.workers), [&](std::size_t i) {
    const auto [d, p] = items[i];
    auto& r = results[i];
    for_each_char_sequence_with_multiplicity((d - 1) * (d - 2), p, options.max_terms,
                                             [&](const CharSequence& cs) { screen(cs, d, r); });
    if (options.progress) options.progress->add(r.candidates);
  });
  return merge(d_min, std::max(d_min - 1, d_max), items, results);
}

SurveyResult survey_coprime_pairs(Int d_min, Int d_max, const SurveyOptions& options) {
  std::vector<WorkItem> items;
  for (Int d = std::max<Int>(d_min, 3); d <= d_max; ++d) items.push_back({d, 0});
  std::vector<ItemResult> results(items.size());
  parallel_for(items.size(), resolve_workers(options.workers), [&](std::size_t i) {
    const Int d = items[i].degree;
    const Int n = (d - 1) * (d - 2);
    auto& r = results[i];
    for (Int x = 1; x * x < n; ++x) {
      if (n % x != 0) continue;
      const Int a = x + 1;
      const Int b = n / x + 1;
      if (std::gcd(a, b) != 1) continue;
      screen(CharSequence::validate(a, {b}), d, r);
    }
    if (options.progress) options.progress->add(r.candidates);
  });
  return merge(d_min, std::max(d_min - 1, d_max), items, results);
}

std::vector<TableRow> table_degree(Int d, std::size_t max_terms) {
  std::vector<TableRow> rows;
  for (const auto& cs : enumerate_char_sequences((d - 1) * (d - 2), max_terms)) {
    const auto report = semigroup_distribution(CurveConfig::make(d, {cs}));
    rows.push_back({cs, report.verdict, report.first_fail});
  }
  return rows;
}

Int estimated_single_cusp_candidates(Int d_min, Int d_max) {
  double total = 0;
  for (Int d = std::max<Int>(d_min, 3); d <= d_max; ++d) total += 1.2e-3 * std::pow(static_cast<double>(d), 4.5);
  return static_cast<Int>(total);
}

std::vector<KnownCurve> known_unicuspidal_curves(Int d_max) {
  std::vector<KnownCurve> out;
  for (Int d = 3; d <= d_max; ++d) {
    out.push_back({d, d - 1, d, "(d-1;d)"});
    if (d % 2 == 0 && d >= 4) out.push_back({d, d / 2, 2 * d - 1, "(d/2;2d-1)"});
  }
  for (int j = 5; fibonacci(j - 1) * fibonacci(j - 1) + 1 <= d_max || fibonacci(j) <= d_max; j += 2) {
    if (j >= 7 && fibonacci(j) <= d_max) {
      out.push_back({fibonacci(j), fibonacci(j - 2), fibonacci(j + 2), "(phi_{j-2};phi_{j+2})"});
    }
    const Int deg = fibonacci(j - 1) * fibonacci(j - 1) + 1;
    if (deg <= d_max) {
      out.push_back({deg, fibonacci(j - 2) * fibonacci(j - 2), fibonacci(j) * fibonacci(j),
                     "(phi_{j-2}^2;phi_j^2)"});
    }
  }
  if (d_max >= 8) out.push_back({8, 3, 22, "sporadic"});
  if (d_max >= 16) out.push_back({16, 6, 43, "sporadic"});
  std::sort(out.begin(), out.end(), [](const KnownCurve& x, const KnownCurve& y) {
    return std::tie(x.degree, x.a, x.b) < std::tie(y.degree, y.a, y.b);
  });
  return out;
}

bool is_known_unicuspidal(Int a, Int b, Int d) {
  for (const auto& k : known_unicuspidal_curves(d)) {
    if (k.degree == d && k.a == a && k.b == b) return true;
  }
  return false;
}

}  // namespace cusp
