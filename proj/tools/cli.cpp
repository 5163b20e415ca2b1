#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rauzy/balanced_pairs.hpp"
#include "rauzy/cloud_io.hpp"
#include "rauzy/error.hpp"
#include "rauzy/fractal.hpp"
#include "rauzy/pisot.hpp"
#include "rauzy/reference_suite.hpp"
#include "rauzy/report.hpp"
#include "rauzy/spectral.hpp"
#include "rauzy/substitution_io.hpp"

namespace rauzy::cli {

namespace {

namespace fs = std::filesystem;

struct PreconditionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::Io:
      return kUsage;
    case ErrorKind::IndeterminateClassification:
      return kIndeterminate;
    case ErrorKind::NoConvergence:
      return kLimit;
    default:
      return kPrecondition;
  }
}

struct Options {
  std::string path1, path2, out;
  std::optional<std::string> csv, svg;
  std::size_t n = 100'000;
  std::size_t threads = 1;
  double tol = kDefaultTolerance;
  BpaLimits limits;
};

void emit(const Json& json, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << json.dump(2) << '\n';
  else
    write_text_file(out_path, json.dump(2) + "\n");
}

ProjectionOperator operator_for(const Substitution& sigma, double tol) {
  const PisotReport report = classify_pisot(sigma);
  if (!report.is_primitive) throw PreconditionFailure("substitution is not primitive");
  if (!report.is_pisot) throw PreconditionFailure("substitution is not Pisot");
  return projection_operator(spectral_split(incidence_matrix(sigma), tol, report.minimal_poly));
}

Json bounds_json(const LabeledPointCloud& cloud) {
  const auto b = cloud.bounds();
  return Json{{"lo", b.lo}, {"hi", b.hi}};
}

Json cloud_summary(const LabeledPointCloud& cloud) {
  return Json{{"points", cloud.size()}, {"dim", cloud.dim}, {"bounds", bounds_json(cloud)}, {"diameter", cloud.diameter()}};
}

Substitution second_or_reverse(const Options& o, const NamedSubstitution& first) {
  if (o.path2.empty()) return reverse_substitution(first.substitution);
  return load_substitution(o.path2).substitution;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  AnalysisOptions opts;
  opts.tol = o.tol;
  emit(analysis_report(load_substitution(o.path1), opts), "", out);
  return kOk;
}

int cmd_reverse(const Options& o, std::ostream& out) {
  const NamedSubstitution named = load_substitution(o.path1);
  const std::string text =
      substitution_to_string(reverse_substitution(named.substitution), named.name + "_reversed");
  if (o.out.empty())
    out << text;
  else
    write_text_file(o.out, text);
  return kOk;
}

int cmd_fractal(const Options& o, std::ostream& out) {
  const NamedSubstitution named = load_substitution(o.path1);
  const ProjectionOperator op = operator_for(named.substitution, o.tol);
  CloudOptions copts;
  copts.threads = o.threads;
  copts.substitution_id = named.name;
  const LabeledPointCloud cloud = rauzy_cloud(named.substitution, o.n, op, copts);
  Json summary = cloud_summary(cloud);
  if (o.csv) {
    export_csv(cloud, *o.csv);
    summary["csv"] = *o.csv;
  }
  if (o.svg) {
    render_svg(std::span(&cloud, 1), *o.svg);
    summary["svg"] = *o.svg;
  }
  emit(summary, "", out);
  return kOk;
}

int cmd_bpa(const Options& o, std::ostream& out) {
  const NamedSubstitution first = load_substitution(o.path1);
  const Substitution second = second_or_reverse(o, first);
  const BpaOutcome outcome = run_bpa(first.substitution, second, o.limits);
  emit(bpa_report(first.substitution, second, outcome), o.out, out);
  return std::holds_alternative<PairSubstitution>(outcome) ? kOk : kLimit;
}

int cmd_intersect(const Options& o, std::ostream& out) {
  const NamedSubstitution first = load_substitution(o.path1);
  const Substitution second = second_or_reverse(o, first);
  const BpaOutcome outcome = run_bpa(first.substitution, second, o.limits);
  const auto* sigma = std::get_if<PairSubstitution>(&outcome);
  if (!sigma) {
    emit(bpa_report(first.substitution, second, outcome), o.out, out);
    return kLimit;
  }
  const ProjectionOperator op = operator_for(first.substitution, o.tol);
  CloudOptions copts;
  copts.threads = o.threads;
  copts.substitution_id = first.name + "-intersection";
  const LabeledPointCloud inter = intersection_cloud(*sigma, op, o.n, copts);

  Json summary;
  summary["status"] = "complete";
  summary["pairs"] = sigma->size();
  summary["char_poly"] = polynomial_to_json(sigma_incidence(*sigma).char_poly);
  summary["intersection"] = cloud_summary(inter);
  if (o.csv) {
    export_csv(inter, *o.csv);
    summary["csv"] = *o.csv;
  }
  if (o.svg) {
    copts.substitution_id = first.name;
    std::vector<LabeledPointCloud> clouds;
    clouds.push_back(rauzy_cloud(first.substitution, o.n, op, copts));
    copts.substitution_id = first.name + "-second";
    clouds.push_back(rauzy_cloud(second, o.n, op, copts));
    clouds.push_back(inter);
    render_svg(clouds, *o.svg);
    summary["svg"] = *o.svg;
  }
  emit(summary, o.out, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  reference::SuiteOptions opts;
  opts.threads = o.threads;
  std::size_t failed = 0;
  for (const auto& r : reference::run_reference_suite(opts)) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.detail << '\n';
    if (!r.passed) ++failed;
  }
  out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << '\n';
  return failed == 0 ? kOk : kUsage;
}

void add_tol(CLI::App* sub, Options& o) {
  sub->add_option("--tol", o.tol, "Residual tolerance for the spectral split")->capture_default_str();
}

void add_threads(CLI::App* sub, Options& o) {
  sub->add_option("--threads", o.threads, "Worker threads for projection")->capture_default_str()->check(
      CLI::PositiveNumber);
}

void add_limits(CLI::App* sub, Options& o) {
  sub->add_option("--max-pairs", o.limits.max_pairs, "Stop after this many pairs")->capture_default_str();
  sub->add_option("--prefix-cutoff", o.limits.prefix_cutoff, "Prefix length searched for the initial pair")
      ->capture_default_str();
  sub->add_option("--max-pair-length", o.limits.max_pair_length, "Longest pair accepted")->capture_default_str();
}

void add_outputs(CLI::App* sub, Options& o) {
  sub->add_option("--csv", o.csv, "Write the point cloud as CSV");
  sub->add_option("--svg", o.svg, "Write a scatter plot as SVG");
  sub->add_option("--n", o.n, "Number of points")->capture_default_str()->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rauzy fractals, Pisot classification and balanced pairs", "rauzy"};
  app.set_version_flag("--version", RAUZY_VERSION);
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "Classify a substitution and print a JSON report");
  analyze->add_option("path", o.path1, "Substitution JSON file")->required();
  add_tol(analyze, o);

  auto* reverse = app.add_subcommand("reverse", "Write the reversed substitution");
  reverse->add_option("path", o.path1, "Substitution JSON file")->required();
  reverse->add_option("--out", o.out, "Output file (default: stdout)");

  auto* fractal = app.add_subcommand("fractal", "Project the fixed point onto the contracting space");
  fractal->add_option("path", o.path1, "Substitution JSON file")->required();
  add_outputs(fractal, o);
  add_tol(fractal, o);
  add_threads(fractal, o);

  auto* bpa = app.add_subcommand("bpa", "Run the balanced pair algorithm");
  bpa->add_option("path", o.path1, "First substitution JSON file")->required();
  bpa->add_option("second", o.path2, "Second substitution (default: reverse of the first)");
  bpa->add_option("--out", o.out, "Output file (default: stdout)");
  add_limits(bpa, o);

  auto* intersect = app.add_subcommand("intersect", "Balanced pairs followed by the intersection cloud");
  intersect->add_option("path", o.path1, "First substitution JSON file")->required();
  intersect->add_option("second", o.path2, "Second substitution (default: reverse of the first)");
  intersect->add_option("--out", o.out, "Summary file (default: stdout)");
  add_outputs(intersect, o);
  add_tol(intersect, o);
  add_threads(intersect, o);
  add_limits(intersect, o);

  auto* verify = app.add_subcommand("verify-examples", "Run the built-in reference checks");
  verify->alias("verify-paper");
  add_threads(verify, o);

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(o, out);
    if (*reverse) return cmd_reverse(o, out);
    if (*fractal) return cmd_fractal(o, out);
    if (*bpa) return cmd_bpa(o, out);
    if (*intersect) return cmd_intersect(o, out);
    return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const PreconditionFailure& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace rauzy::cli
