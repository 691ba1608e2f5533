// Serial vs OpenMP timing of the full suite; also confirms both give the same report.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hyper/suite.hpp"

namespace {

double best_of(int reps, const hyper::RunConfig& cfg, hyper::Execution exec, std::string& json) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto report = hyper::run_suite(cfg, exec);
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    json = hyper::report_json(report, false);
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t samples = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 1000;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-8s %-13s %12s %12s %8s  %s\n", "space", "endpoint", "serial ms", "parallel ms", "speedup", "reports");
  bool all_same = true;
  for (auto space : {hyper::ModelKind::Segment, hyper::ModelKind::Annulus}) {
    for (auto endpoint : {hyper::EndpointConvention::UpperClosed, hyper::EndpointConvention::StrictBoth}) {
      hyper::RunConfig cfg;
      cfg.space = space;
      cfg.endpoint = endpoint;
      cfg.samples = samples;
      std::string serial_json, parallel_json;
      const double serial = best_of(reps, cfg, hyper::Execution::Serial, serial_json);
      const double parallel = best_of(reps, cfg, hyper::Execution::Parallel, parallel_json);
      const bool same = serial_json == parallel_json;
      all_same = all_same && same;
      std::printf("%-8s %-13s %12.2f %12.2f %7.2fx  %s\n", std::string(hyper::to_string(space)).c_str(),
                  std::string(hyper::to_string(endpoint)).c_str(), serial, parallel, serial / parallel,
                  same ? "identical" : "DIFFER");
    }
  }
  return all_same ? 0 : 1;
}
