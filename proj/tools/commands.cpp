#include "commands.hpp"

#include <charconv>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <regex>
#include <sstream>
#include <thread>

#include "cuspidal/alexander.hpp"
#include "cuspidal/criteria.hpp"
#include "cuspidal/staircase.hpp"
#include "cuspidal/survey.hpp"
#include "table.hpp"

namespace cuspcheck {

using cusp::CharSequence;
using cusp::Int;
using json = nlohmann::ordered_json;

namespace {

int exit_for(const cusp::Error& e) {
  switch (e.code()) {
    case cusp::ErrorCode::ParseError: return kParse;
    case cusp::ErrorCode::SurgeryTooSmall: return kSurgery;
    default: return kValidation;
  }
}

CommandError from_error(const cusp::Error& e) {
  return {exit_for(e), e.what()};
}

CharSequence parse_cusp(const std::string& spec) {
  try {
    return CharSequence::parse(spec);
  } catch (const cusp::Error& e) {
    throw from_error(e);
  }
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

template <class T>
std::vector<T> to_vec(std::span<const T> s) {
  return {s.begin(), s.end()};
}

std::optional<long> parse_long(const std::string& s) {
  long v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

json optional_json(const std::optional<Int>& v) { return v ? json(*v) : json(nullptr); }

std::string optional_text(const std::optional<Int>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

const std::string& Report::render(Format f, std::string& scratch) const {
  switch (f) {
    case Format::Text: return text;
    case Format::Csv: return csv;
    case Format::Json: scratch = json.dump(2) + "\n"; return scratch;
  }
  return text;
}

unsigned resolve_workers(std::optional<unsigned> flag) {
  if (flag) return *flag;
  const char* env = std::getenv("CUSPIDAL_WORKERS");
  if (!env || !*env) return 0;
  const auto v = parse_long(env);
  if (!v || *v < 0) throw CommandError{kParse, std::string("CUSPIDAL_WORKERS must be a non-negative integer, got '") + env + "'"};
  return static_cast<unsigned>(*v);
}

// ---------------------------------------------------------------- knot

Report cmd_knot(const std::string& spec) {
  const auto c = parse_cusp(spec);
  const auto sg = cusp::semigroup(c);
  const auto poly = cusp::alexander_from_gaps(sg.gaps);
  const auto k = cusp::k_coefficients(poly);
  const auto st = cusp::Staircase::from_alexander(poly);
  const auto steps = to_vec(st.steps());
  const auto exps = to_vec(poly.exponents());

  std::vector<std::string> verts;
  json jverts = json::array();
  for (const auto& v : st.a_vertices()) {
    verts.push_back("(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")");
    jverts.push_back({v.i, v.j});
  }

  Report r;
  r.json = {{"sequence", c.to_string()},
            {"valid", true},
            {"multiplicity", c.multiplicity()},
            {"milnor", sg.milnor},
            {"genus", sg.genus},
            {"generators", sg.generators},
            {"gaps", sg.gaps},
            {"alexander_exponents", exps},
            {"k_coefficients", k},
            {"staircase_steps", steps},
            {"a_vertices", jverts}};

  const std::vector<std::pair<std::string, std::string>> fields{
      {"sequence", c.to_string()},
      {"valid", "yes"},
      {"milnor", std::to_string(sg.milnor)},
      {"genus", std::to_string(sg.genus)},
      {"generators", join(sg.generators)},
      {"gaps", join(sg.gaps)},
      {"alexander_exponents", join(exps)},
      {"k_coefficients", join(k)},
      {"staircase_steps", join(steps)},
      {"a_vertices", join(verts, " ")},
  };
  Table t{{"field", "value"}, {}};
  std::ostringstream os;
  for (const auto& [key, value] : fields) {
    t.rows.push_back({key, value});
    os << key << ": " << value << '\n';
  }
  r.text = os.str();
  r.csv = t.csv();
  return r;
}

// ---------------------------------------------------------------- check

namespace {

const std::vector<std::string> kAllCriteria{"semigroup", "coefficient", "matsuoka-sakai", "orevkov",
                                            "strong-multiplicity"};

cusp::CriterionReport run_criterion(const std::string& name, const cusp::CurveConfig& cfg) {
  if (name == "semigroup") return cusp::semigroup_distribution(cfg);
  if (name == "coefficient") {
    if (cfg.cusps.size() != 1) {
      cusp::CriterionReport r;
      r.criterion = name;
      r.note = "coefficient form applies to a single cusp only";
      return r;
    }
    return cusp::coefficient_check_single_cusp(cfg);
  }
  if (name == "matsuoka-sakai") return cusp::matsuoka_sakai(cfg);
  if (name == "orevkov") return cusp::orevkov_bound(cfg);
  return cusp::strong_multiplicity(cfg);
}

}  // namespace

Report cmd_check(const CheckRequest& req) {
  std::vector<CharSequence> cusps;
  for (const auto& s : req.cusps) cusps.push_back(parse_cusp(s));
  if (cusps.empty()) throw CommandError{kParse, "at least one --cusp is required"};
  if (req.degree < 1) throw CommandError{kValidation, "degree must be positive"};
  std::vector<std::string> wanted = req.criteria;
  for (const auto& w : wanted) {
    if (std::find(kAllCriteria.begin(), kAllCriteria.end(), w) == kAllCriteria.end()) {
      throw CommandError{kParse, "unknown criterion '" + w + "' (choose from " + join(kAllCriteria) + ")"};
    }
  }
  const bool defaults = wanted.empty();
  if (defaults) {
    wanted = kAllCriteria;
    if (cusps.size() != 1) std::erase(wanted, std::string("coefficient"));
  }

  const auto cfg = cusp::CurveConfig::make(req.degree, std::move(cusps));
  const auto genus = cusp::genus_compatibility(cfg);
  const bool genus_ok = genus.passed();

  std::vector<cusp::CriterionReport> reports;
  for (const auto& name : wanted) {
    if (!genus_ok) {
      cusp::CriterionReport r;
      r.criterion = name;
      r.note = "genus compatibility fails";
      reports.push_back(std::move(r));
    } else {
      try {
        reports.push_back(run_criterion(name, cfg));
      } catch (const cusp::Error& e) {
        throw from_error(e);
      }
    }
  }

  Report out;
  bool any_fail = false;
  for (const auto& r : reports) any_fail |= r.verdict == cusp::Verdict::Fail;
  out.exit_code = !genus_ok ? kGenus : any_fail ? kCriterionFail : kPass;
  const char* result = !genus_ok ? "genus-mismatch" : any_fail ? "fail" : "pass";

  std::vector<std::string> names;
  for (const auto& c : cfg.cusps) names.push_back(c.to_string());

  json jc = json::array();
  for (const auto& r : reports) {
    json rows = json::array();
    for (const auto& row : r.details) {
      rows.push_back({{"j", row.j}, {"actual", row.actual}, {"expected", row.expected}, {"ok", row.ok()}});
    }
    jc.push_back({{"criterion", r.criterion},
                  {"verdict", std::string(cusp::to_string(r.verdict))},
                  {"first_fail", optional_json(r.first_fail)},
                  {"note", r.note},
                  {"rows", rows}});
  }
  out.json = {{"degree", cfg.degree},
              {"cusps", names},
              {"genus",
               {{"actual", genus.details[0].actual}, {"expected", genus.details[0].expected}, {"passed", genus_ok}}},
              {"criteria", jc},
              {"result", result},
              {"exit_code", out.exit_code}};

  std::ostringstream os;
  os << "degree " << cfg.degree << ", cusps " << join(names, " ") << '\n';
  os << "genus: " << (genus_ok ? "pass" : "fail") << " (" << genus.note << ")\n";
  Table csv{{"criterion", "verdict", "first_fail", "j", "actual", "expected", "ok"}, {}};
  for (const auto& r : reports) {
    const std::string verdict(cusp::to_string(r.verdict));
    os << r.criterion << ": " << verdict;
    if (r.first_fail) os << ", first failing j = " << *r.first_fail;
    if (!r.note.empty()) os << " (" << r.note << ")";
    os << '\n';
    if (r.criterion == "semigroup" || r.criterion == "coefficient") {
      Table t{{"j", "actual", "expected", "ok"}, {}};
      for (const auto& row : r.details) {
        t.rows.push_back({std::to_string(row.j), std::to_string(row.actual), std::to_string(row.expected),
                          row.ok() ? "yes" : "NO"});
      }
      if (!t.rows.empty()) {
        std::istringstream lines(t.text());
        for (std::string l; std::getline(lines, l);) os << "    " << l << '\n';
      }
    }
    if (r.details.empty()) {
      csv.rows.push_back({r.criterion, verdict, "", "", "", "", ""});
    }
    for (const auto& row : r.details) {
      csv.rows.push_back({r.criterion, verdict, optional_text(r.first_fail), std::to_string(row.j),
                          std::to_string(row.actual), std::to_string(row.expected), row.ok() ? "true" : "false"});
    }
  }
  os << "result: " << result << '\n';
  out.text = os.str();
  out.csv = csv.csv();
  return out;
}

// ---------------------------------------------------------------- enumerate

Report cmd_enumerate(long degree, std::size_t max_terms) {
  if (degree < 3) throw CommandError{kValidation, "degree must be at least 3"};
  const auto rows = cusp::table_degree(degree, max_terms);
  Report out;
  Table t{{"sequence", "verdict", "first_fail"}, {}};
  json jrows = json::array();
  Int passing = 0;
  for (const auto& row : rows) {
    const std::string verdict(cusp::to_string(row.verdict));
    passing += row.verdict == cusp::Verdict::Pass;
    t.rows.push_back({row.sequence.to_string(), verdict, optional_text(row.first_fail)});
    jrows.push_back({{"sequence", row.sequence.to_string()}, {"verdict", verdict}, {"first_fail", optional_json(row.first_fail)}});
  }
  out.json = {{"degree", degree},
              {"milnor", (degree - 1) * (degree - 2)},
              {"max_terms", max_terms},
              {"count", rows.size()},
              {"passing", passing},
              {"rows", jrows}};
  out.text = t.text() + std::to_string(rows.size()) + " types, " + std::to_string(passing) + " pass\n";
  out.csv = t.csv();
  return out;
}

// ---------------------------------------------------------------- dinv

Report cmd_dinv(const DinvRequest& req) {
  std::vector<CharSequence> cusps;
  for (const auto& s : req.cusps) cusps.push_back(parse_cusp(s));
  if (cusps.empty()) throw CommandError{kParse, "at least one --cusp is required"};
  std::vector<cusp::StepFunction> fs;
  Int genus = 0;
  for (const auto& c : cusps) {
    fs.push_back(cusp::StepFunction::of(c));
    genus += fs.back().genus();
  }
  const Int q = req.surgery;
  if (q <= 2 * genus - 1) {
    throw CommandError{kSurgery, "SurgeryTooSmall: surgery " + std::to_string(q) + " <= 2g - 1 = " +
                                     std::to_string(2 * genus - 1)};
  }

  std::vector<Int> labels;
  if (req.spinc == "all") {
    for (Int m = -(q / 2); m <= q / 2; ++m) labels.push_back(m);
  } else if (req.spinc.rfind("extendable:", 0) == 0) {
    const auto d = parse_long(req.spinc.substr(11));
    if (!d || *d < 1) throw CommandError{kParse, "expected extendable:D with D >= 1, got '" + req.spinc + "'"};
    labels = cusp::extendable_spinc(*d);
  } else if (const auto m = parse_long(req.spinc)) {
    labels.push_back(*m);
  } else {
    throw CommandError{kParse, "--spinc must be an integer, 'all' or 'extendable:D', got '" + req.spinc + "'"};
  }

  Report out;
  Table t{{"m", "d"}, {}};
  json values = json::array();
  bool all_zero = true;
  for (Int m : labels) {
    cusp::Rational d;
    try {
      d = cusp::d_invariant(fs, q, m);
    } catch (const cusp::Error& e) {
      throw from_error(e);
    }
    all_zero = all_zero && d == cusp::Rational(0);
    t.rows.push_back({std::to_string(m), d.to_string()});
    values.push_back({{"m", m}, {"d", d.to_string()}});
  }
  std::vector<std::string> names;
  for (const auto& c : cusps) names.push_back(c.to_string());
  out.json = {{"cusps", names}, {"genus", genus}, {"surgery", q}, {"spinc", req.spinc}, {"values", values},
              {"all_zero", all_zero}};
  out.text = "S^3_" + std::to_string(q) + "(" + join(names, " # ") + "), genus " + std::to_string(genus) + "\n" +
             t.text();
  out.csv = t.csv();
  return out;
}

// ---------------------------------------------------------------- survey

namespace {

std::pair<long, long> parse_range(const std::string& s) {
  static const std::regex re(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw CommandError{kParse, "--range must look like A..B, got '" + s + "'"};
  const auto a = parse_long(m[1].str());
  const auto b = parse_long(m[2].str());
  if (!a || !b) throw CommandError{kParse, "--range bounds out of range: '" + s + "'"};
  return {*a, *b};
}

// Prints "done/estimate" to stderr about once a second until stopped.
class ProgressReporter {
 public:
  ProgressReporter(const cusp::ProgressCounter& counter, Int estimate)
      : thread_([this, &counter, estimate](std::stop_token stop) {
          std::unique_lock lock(mutex_);
          while (!cv_.wait_for(lock, stop, std::chrono::seconds(1), [&] { return stop.stop_requested(); })) {
            std::cerr << "\r" << counter.done() << " / ~" << estimate << " candidates" << std::flush;
          }
          std::cerr << "\r" << counter.done() << " candidates checked\n";
        }) {}

 private:
  std::mutex mutex_;
  std::condition_variable_any cv_;
  std::jthread thread_;
};

}  // namespace

Report cmd_survey(const SurveyRequest& req) {
  const auto [a, b] = parse_range(req.range);
  if (a < 3 || a > b) throw CommandError{kValidation, "--range needs 3 <= A <= B"};
  const bool single = req.mode == "single-cusp";
  if (!single && req.mode != "coprime-pairs") {
    throw CommandError{kParse, "--mode must be single-cusp or coprime-pairs"};
  }
  const Int estimate = single ? cusp::estimated_single_cusp_candidates(a, b) : 0;
  if (estimate > kLongRunThreshold && !req.long_ok) {
    throw CommandError{kValidation, "RefusedLongRun: about " + std::to_string(estimate) +
                                        " candidates exceeds " + std::to_string(kLongRunThreshold) +
                                        "; pass --long-ok to run anyway"};
  }

  cusp::ProgressCounter counter;
  cusp::SurveyOptions opts{req.workers, req.max_terms, &counter};
  cusp::SurveyResult res;
  {
    std::optional<ProgressReporter> reporter;
    if (req.progress) reporter.emplace(counter, estimate);
    res = single ? cusp::survey_single_cusp(a, b, opts) : cusp::survey_coprime_pairs(a, b, opts);
  }

  Report out;
  Table per{{"degree", "candidates", "pass_semigroup", "pass_orevkov", "pass_both", "passing"}, {}};
  json jdeg = json::array();
  json unknown = json::array();
  std::vector<std::string> unknown_text;
  for (const auto& t : res.per_degree) {
    std::vector<std::string> names;
    for (const auto& c : t.passing) {
      names.push_back(c.to_string());
      // The known families are all of torus type (one Puiseux pair).
      if (c.num_terms() == 1 && !cusp::is_known_unicuspidal(c.multiplicity(), c.terms().front(), t.degree)) {
        unknown.push_back({{"degree", t.degree}, {"sequence", c.to_string()}});
        unknown_text.push_back(c.to_string() + " in degree " + std::to_string(t.degree));
      }
    }
    per.rows.push_back({std::to_string(t.degree), std::to_string(t.candidates), std::to_string(t.pass_semigroup),
                        std::to_string(t.pass_orevkov), std::to_string(t.pass_both), join(names, " ")});
    jdeg.push_back({{"degree", t.degree},
                    {"candidates", t.candidates},
                    {"pass_semigroup", t.pass_semigroup},
                    {"pass_orevkov", t.pass_orevkov},
                    {"pass_both", t.pass_both},
                    {"passing", names}});
  }
  out.json = {{"mode", req.mode},
              {"range", {{"from", a}, {"to", b}}},
              {"max_terms", single ? json(req.max_terms) : json(nullptr)},
              {"total_candidates", res.total_candidates},
              {"pass_semigroup", res.pass_semigroup},
              {"pass_orevkov", res.pass_orevkov},
              {"pass_both", res.pass_both},
              {"torus_type_outside_known_families", unknown},
              {"per_degree", jdeg}};

  std::ostringstream os;
  os << req.mode << " survey, degrees " << a << ".." << b;
  if (single) os << ", at most " << (req.max_terms ? std::to_string(req.max_terms) : "any number of") << " terms";
  os << "\ncandidates:          " << res.total_candidates << "\npass semigroup:      " << res.pass_semigroup
     << "\npass Orevkov:        " << res.pass_orevkov << "\npass both:           " << res.pass_both
     << "\ntorus types outside known families: " << (unknown_text.empty() ? "none" : join(unknown_text, ", ")) << "\n\n"
     << per.text();
  out.text = os.str();
  per.rows.push_back({"total", std::to_string(res.total_candidates), std::to_string(res.pass_semigroup),
                      std::to_string(res.pass_orevkov), std::to_string(res.pass_both), ""});
  out.csv = per.csv();
  return out;
}

}  // namespace cuspcheck
