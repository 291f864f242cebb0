#include "cuspidal/criteria.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cuspidal/alexander.hpp"
#include "cuspidal/gapfn.hpp"

namespace cusp {

namespace {

Int triangle(Int a) { return a * (a + 1) / 2; }

Int rational_genus(Int d) { return (d - 1) * (d - 2) / 2; }

void finish(CriterionReport& report) {
  report.first_fail.reset();
  for (const auto& row : report.details) {
    if (!row.ok()) {
      report.first_fail = row.j;
      break;
    }
  }
  report.verdict = report.first_fail ? Verdict::Fail : Verdict::Pass;
}

CriterionReport inapplicable(std::string name, std::string why) {
  CriterionReport r;
  r.criterion = std::move(name);
  r.verdict = Verdict::Inapplicable;
  r.note = std::move(why);
  return r;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

CurveConfig CurveConfig::make(Int degree, std::vector<CharSequence> cusps) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  if (cusps.empty()) throw Error(ErrorCode::EmptyList, "a configuration needs at least one cusp");
  std::stable_sort(cusps.begin(), cusps.end(), [](const CharSequence& a, const CharSequence& b) {
    return a.multiplicity() > b.multiplicity();
  });
  return CurveConfig{degree, std::move(cusps)};
}

Int CurveConfig::total_genus() const {
  Int g = 0;
  for (const auto& c : cusps) g += milnor_number(c) / 2;
  return g;
}

std::vector<Int> CriterionReport::failing_j() const {
  std::vector<Int> out;
  for (const auto& row : details) {
    if (!row.ok()) out.push_back(row.j);
  }
  return out;
}

CriterionReport genus_compatibility(const CurveConfig& cfg) {
  CriterionReport r;
  r.criterion = "genus";
  r.details.push_back({0, cfg.total_genus(), rational_genus(cfg.degree)});
  finish(r);
  r.first_fail.reset();
  std::ostringstream os;
  os << "sum of cusp genera " << r.details[0].actual << ", (d-1)(d-2)/2 = " << r.details[0].expected;
  r.note = os.str();
  return r;
}

CriterionReport semigroup_distribution(const CurveConfig& cfg) {
  const Int d = cfg.degree;
  if (!genus_compatibility(cfg).passed()) {
    return inapplicable("semigroup", "genus compatibility fails");
  }
  std::vector<StepFunction> fs;
  fs.reserve(cfg.cusps.size());
  for (const auto& c : cfg.cusps) fs.push_back(StepFunction::of(c));
  const CountingConvolution conv(fs, (d - 2) * d + 1);

  CriterionReport r;
  r.criterion = "semigroup";
  std::vector<Int> gap_form_failures;
  for (Int j = -1; j <= d - 2; ++j) {
    const Int m = j * d + 1;
    r.details.push_back({j, conv.counting(m), triangle(j + 1)});
    if (conv.gap(m) != (j - d + 1) * (j - d + 2) / 2) gap_form_failures.push_back(j);
  }
  finish(r);
  if (r.failing_j() != gap_form_failures) {
    throw Error(ErrorCode::InternalInconsistency, "R-form and I-form of the criterion disagree");
  }
  if (!r.details.front().ok() || !r.details.back().ok()) {
    throw Error(ErrorCode::InternalInconsistency, "endpoint rows j = -1 or j = d-2 fail despite genus compatibility");
  }
  return r;
}

CriterionReport coefficient_check_single_cusp(const CurveConfig& cfg) {
  if (cfg.cusps.size() != 1) {
    throw Error(ErrorCode::MultipleCusps, "coefficient form applies to a single cusp only");
  }
  if (!genus_compatibility(cfg).passed()) {
    return inapplicable("coefficient", "genus compatibility fails");
  }
  const Int d = cfg.degree;
  const auto k = k_coefficients(alexander_from_gaps(semigroup(cfg.cusps[0]).gaps));
  CriterionReport r;
  r.criterion = "coefficient";
  for (Int j = 0; j <= d - 3; ++j) {
    const auto idx = static_cast<std::size_t>(j * d);
    const Int actual = idx < k.size() ? k[idx] : 0;
    r.details.push_back({j, actual, (d - j - 2) * (d - j - 1) / 2});
  }
  finish(r);
  return r;
}

CriterionReport matsuoka_sakai(const CurveConfig& cfg) {
  CriterionReport r;
  r.criterion = "matsuoka-sakai";
  const Int p1 = cfg.cusps.front().multiplicity();
  r.verdict = 3 * p1 > cfg.degree ? Verdict::Pass : Verdict::Fail;
  r.note = "3 p1 = " + std::to_string(3 * p1) + (r.passed() ? " > " : " <= ") + "d = " + std::to_string(cfg.degree);
  return r;
}

bool orevkov_inequality(Int p, Int d) {
  // 10 * (alpha (p+1) + 1/sqrt5 - d) = A + B sqrt5 with B > 0.
  const Int a = 15 * (p + 1) - 10 * d;
  const Int b = 5 * (p + 1) + 2;
  if (a >= 0) return true;
  return 5 * b * b > a * a;
}

CriterionReport orevkov_bound(const CurveConfig& cfg) {
  CriterionReport r;
  r.criterion = "orevkov";
  const Int p1 = cfg.cusps.front().multiplicity();
  r.verdict = orevkov_inequality(p1, cfg.degree) ? Verdict::Pass : Verdict::Fail;
  std::ostringstream os;
  os << "alpha(p1+1) + 1/sqrt5 - d = (" << 15 * (p1 + 1) - 10 * cfg.degree << " + " << 5 * (p1 + 1) + 2
     << " sqrt5)/10 with p1 = " << p1;
  r.note = os.str();
  return r;
}

CriterionReport strong_multiplicity(const CurveConfig& cfg) {
  const Int bound = cfg.degree + static_cast<Int>(cfg.cusps.size()) - 1;
  CriterionReport r;
  r.criterion = "strong-multiplicity";
  for (std::size_t i = 0; i < cfg.cusps.size(); ++i) {
    const auto& c = cfg.cusps[i];
    if (2 * c.multiplicity() <= bound) continue;
    const Int q1 = c.terms().front();
    // The row records q1 against the bound; it is satisfied when q1 <= bound.
    r.details.push_back({static_cast<Int>(i), q1, std::min(q1, bound)});
  }
  if (r.details.empty()) {
    r.note = "no cusp has 2p > d + n - 1 = " + std::to_string(bound);
    return r;
  }
  finish(r);
  r.note = "q1 <= d + n - 1 = " + std::to_string(bound) + " required for cusps with 2p > d + n - 1";
  return r;
}

std::optional<Int> first_semigroup_failure(const CharSequence& cs, Int d) {
  const auto gens = semigroup_generators(cs);
  const Int limit = (d - 3) * d;
  std::vector<char> member(static_cast<std::size_t>(std::max<Int>(limit, 0) + 1), 0);
  Int count = 0;  // semigroup elements in [0, x]
  Int j = 0;
  for (Int x = 0; x <= limit; ++x) {
    bool in = x == 0;
    for (std::size_t g = 0; !in && g < gens.size(); ++g) {
      in = gens[g] <= x && member[static_cast<std::size_t>(x - gens[g])];
    }
    member[static_cast<std::size_t>(x)] = in;
    count += in;
    if (x == j * d) {
      if (count != triangle(j + 1)) return j;
      ++j;
    }
  }
  return std::nullopt;
}

}  // namespace cusp
