// hyperchk: run the axiom suite against a planar hyperstructure model, or
// render a hyperset as SVG.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hyper/plot.hpp"
#include "hyper/suite.hpp"

namespace {

enum Exit { kOk = 0, kIoError = 1, kUsage = 2, kMathFailure = 3 };

const std::map<std::string, hyper::ModelKind> kSpaces{
    {"segment", hyper::ModelKind::Segment}, {"annulus", hyper::ModelKind::Annulus}};
const std::map<std::string, hyper::EndpointConvention> kEndpoints{
    {"upper-closed", hyper::EndpointConvention::UpperClosed},
    {"strict", hyper::EndpointConvention::StrictBoth}};

hyper::Point parse_point(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw hyper::ConfigError("expected a point as x,y: " + s);
  try {
    std::size_t used_x = 0, used_y = 0;
    const std::string xs = s.substr(0, comma);
    const std::string ys = s.substr(comma + 1);
    const hyper::Point p{std::stod(xs, &used_x), std::stod(ys, &used_y)};
    if (used_x != xs.size() || used_y != ys.size() || !p.finite()) throw std::invalid_argument(s);
    return p;
  } catch (const std::logic_error&) {
    throw hyper::ConfigError("expected a point as x,y: " + s);
  }
}

struct ModelArgs {
  std::string space = "segment";
  double alpha = 0.5;
  std::string endpoint = "upper-closed";

  void attach(CLI::App* cmd) {
    cmd->add_option("--space", space, "segment or annulus")
        ->check(CLI::IsMember({"segment", "annulus"}))
        ->capture_default_str();
    cmd->add_option("--alpha", alpha, "lower fraction, in (0,1)")->capture_default_str();
    cmd->add_option("--endpoint", endpoint, "upper-closed or strict")
        ->check(CLI::IsMember({"upper-closed", "strict"}))
        ->capture_default_str();
  }
};

int run_check(const ModelArgs& margs, hyper::RunConfig cfg, const std::string& report_path,
              const std::string& plot_path, int threads) {
  cfg.space = kSpaces.at(margs.space);
  cfg.alpha = margs.alpha;
  cfg.endpoint = kEndpoints.at(margs.endpoint);
  cfg.validate();
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif

  const hyper::SuiteReport report = hyper::run_suite(cfg);
  const std::string json = hyper::report_json(report);
  if (report_path.empty() || report_path == "-") {
    std::cout << json;
  } else {
    std::ofstream out(report_path, std::ios::binary);
    out << json;
    if (!out) {
      std::cerr << "error: cannot write report to " << report_path << "\n";
      return kIoError;
    }
  }
  if (!plot_path.empty()) {
    hyper::render_plot({cfg.model(), {1.0, 0.0}, {0.0, 1.0}, std::nullopt}, plot_path);
  }

  for (const auto& s : report.suites) {
    if (s.fail > 0) std::cerr << "FAIL " << s.id << ": " << s.fail << " of " << s.pass + s.fail << "\n";
  }
  return report.all_passed() ? kOk : kMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks hypergroup, hypervector space and hyperinner product axioms on R^2"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hyper::kLibraryVersion));

  ModelArgs check_model;
  hyper::RunConfig cfg;
  std::string report_path;
  std::string check_plot;
  int threads = 0;
  CLI::App* check = app.add_subcommand("check", "run the full axiom and lemma suite");
  check_model.attach(check);
  check->add_option("--samples", cfg.samples, "random cases per suite")->capture_default_str();
  check->add_option("--per-set-samples", cfg.per_set_samples, "members drawn per hyperset")
      ->capture_default_str();
  check->add_option("--seed", cfg.seed, "base seed")->capture_default_str();
  check->add_option("--eps", cfg.eps, "membership tolerance")->capture_default_str();
  check->add_option("--report", report_path, "JSON report path ('-' for stdout)");
  check->add_option("--plot", check_plot, "also plot x=(1,0), y=(0,1) to this SVG path");
  check->add_option("--threads", threads, "worker threads (0 = runtime default)");

  ModelArgs plot_model;
  std::string xs, ys, out_path;
  std::optional<double> a;
  CLI::App* plot = app.add_subcommand("plot", "render x # y and its essential points as SVG");
  plot_model.attach(plot);
  plot->add_option("--x", xs, "first point as x,y")->required();
  plot->add_option("--y", ys, "second point as x,y")->required();
  plot->add_option("--a", a, "also draw the scalar product a o x");
  plot->add_option("--out", out_path, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return run_check(check_model, cfg, report_path, check_plot, threads);

    const auto model = hyper::HypergroupModel::make(kSpaces.at(plot_model.space), plot_model.alpha,
                                                    kEndpoints.at(plot_model.endpoint));
    hyper::render_plot({model, parse_point(xs), parse_point(ys), a}, out_path);
    return kOk;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  }
}
