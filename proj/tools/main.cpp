// cuspcheck: inspect cusps, check curve configurations, enumerate and survey.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace cuspcheck;

namespace {

struct OutputOptions {
  Format format = Format::Text;
  std::string out;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};
  cmd->add_option("--format", o.format, "Output format: text, csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--out", o.out, "Write the output to FILE instead of stdout");
}

int emit(const Report& r, const OutputOptions& o) {
  std::string scratch;
  const auto& body = r.render(o.format, scratch);
  if (o.out.empty()) {
    std::cout << body;
    std::cout.flush();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f || !(f << body)) {
      std::cerr << "error: cannot write " << o.out << '\n';
      return kValidation;
    }
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semigroup-distribution and d-invariant checks for rational cuspidal curves"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cuspcheck 1.0.0");

  OutputOptions out;
  std::function<Report()> run;

  auto* knot = app.add_subcommand("knot", "Invariants of one cusp: semigroup, Alexander polynomial, staircase");
  std::string knot_spec;
  knot->add_option("spec", knot_spec, "Characteristic sequence, e.g. \"3;7\"")->required();
  add_output_options(knot, out);
  knot->callback([&] { run = [&] { return cmd_knot(knot_spec); }; });

  auto* check = app.add_subcommand("check", "Check a configuration of cusps on a degree-d rational curve");
  CheckRequest check_req;
  check->add_option("--degree,-d", check_req.degree, "Degree of the curve")->required();
  check->add_option("--cusp,-c", check_req.cusps, "Cusp \"p;q1,q2,...\" (repeat for several)")->required();
  check->add_option("--criteria", check_req.criteria,
                    "Criteria to run: semigroup, coefficient, matsuoka-sakai, orevkov, strong-multiplicity "
                    "(default: all that apply)")
      ->delimiter(',');
  add_output_options(check, out);
  check->callback([&] { run = [&] { return cmd_check(check_req); }; });

  auto* enumerate = app.add_subcommand("enumerate", "Every cusp type with mu = (d-1)(d-2) and its semigroup verdict");
  long enum_degree = 0;
  std::size_t enum_terms = 0;
  enumerate->add_option("--degree,-d", enum_degree, "Degree")->required();
  enumerate->add_option("--max-terms", enum_terms, "Bound on characteristic terms (0 = none)")->capture_default_str();
  add_output_options(enumerate, out);
  enumerate->callback([&] { run = [&] { return cmd_enumerate(enum_degree, enum_terms); }; });

  auto* dinv = app.add_subcommand("dinv", "d-invariants of large surgery on a connected sum of algebraic knots");
  DinvRequest dinv_req;
  dinv->add_option("--cusp,-c", dinv_req.cusps, "Cusp \"p;q1,q2,...\" (repeat for a connected sum)")->required();
  dinv->add_option("--surgery,-q", dinv_req.surgery, "Surgery coefficient q > 2g - 1")->required();
  dinv->add_option("--spinc", dinv_req.spinc, "Spin^c label m, 'all', or 'extendable:D'")->capture_default_str();
  add_output_options(dinv, out);
  dinv->callback([&] { run = [&] { return cmd_dinv(dinv_req); }; });

  auto* survey = app.add_subcommand("survey", "Exhaustive single-cusp survey over a range of degrees");
  SurveyRequest survey_req;
  std::optional<unsigned> workers;
  survey->add_option("--range,-r", survey_req.range, "Degrees A..B")->required();
  survey->add_option("--mode", survey_req.mode, "single-cusp or coprime-pairs")
      ->check(CLI::IsMember({"single-cusp", "coprime-pairs"}))
      ->capture_default_str();
  survey->add_option("--workers,-j", workers, "Worker threads (default: $CUSPIDAL_WORKERS, else all cores)");
  survey->add_option("--max-terms", survey_req.max_terms, "Bound on characteristic terms (0 = none)")
      ->capture_default_str();
  survey->add_flag("--long-ok", survey_req.long_ok, "Allow runs above the candidate threshold");
  survey->add_flag("--progress", survey_req.progress, "Report progress on stderr");
  add_output_options(survey, out);
  survey->callback([&] {
    run = [&] {
      survey_req.workers = resolve_workers(workers);
      return cmd_survey(survey_req);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    return emit(run(), out);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }
}
