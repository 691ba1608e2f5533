// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "hyper/inner.hpp"
#include "hyper/rng.hpp"
#include "oracle.hpp"

using namespace hyper;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

// Runs body, enforces the time budget, prints the verdict line; returns elapsed ms.
double criterion(int id, const std::string& title, double budget_ms,
                 const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double elapsed = ms_since(t0);
  char timing[96];
  std::snprintf(timing, sizeof(timing), "%.3f ms, budget %.3f ms", elapsed, budget_ms);
  out.require(elapsed < budget_ms, std::string("over time budget"));
  std::cout << (out.ok ? "[PASS] " : "[FAIL] ") << id << ". " << title << " (" << timing << ")";
  if (!out.ok) std::cout << ": " << out.detail;
  std::cout << "\n";
  if (!out.ok) ++failures;
  return elapsed;
}

const Tolerance kTol{1e-9};
constexpr std::size_t kDraws = 1000;
constexpr std::size_t kPerSet = 64;
constexpr std::uint64_t kSeed = 42;

template <typename F>
void each_draw(std::uint64_t salt, F&& f) {
  for (std::size_t i = 0; i < kDraws; ++i) {
    Stream rng(derive_seed(kSeed, salt, i));
    f(rng, i);
  }
}

void record(Outcome& out, const CheckResult& r, std::size_t i) {
  out.require(r.passed, r.axiom_id + " failed on draw " + std::to_string(i) +
                            (r.witness ? " (" + r.witness->note + ")" : std::string()));
}

std::string strip_wall_time(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.find("\"wallTimeMs\"") == std::string::npos) out += line + "\n";
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_check(const fs::path& report) {
  const std::string cmd = std::string(HYPERCHK_PATH) + " check --space segment --alpha 0.5 "
                          "--endpoint upper-closed --samples 1000 --seed 42 --eps 1e-9 --report " +
                          report.string() + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main() {
  const auto seg = HypergroupModel::make(ModelKind::Segment, 0.5);
  const auto ann = HypergroupModel::make(ModelKind::Annulus, 0.5);
  const auto seg_strict = HypergroupModel::make(ModelKind::Segment, 0.5, EndpointConvention::StrictBoth);
  const Point x{1, 0}, y{0, 1};

  criterion(1, "segment essential points of (1,0), (0,1) are exactly {(1,1)}", 1.0, [&](Outcome& out) {
    const EssentialSet es = essential_points(seg, x, y, kTol);
    out.require(es.is_exact(), "expected an exact point list");
    out.require(es.exact().size() == 1, "expected one point");
    out.require(distance(es.exact().front(), {1, 1}) <= 1e-9, "point differs from (1,1)");
  });

  criterion(2, "annulus essential points are not unique", 1000.0, [&](Outcome& out) {
    out.require(is_essential(ann, {1, 1}, x, y, kTol), "(1,1) not essential");
    out.require(is_essential(ann, {-1, 1}, x, y, kTol), "(-1,1) not essential");
    const EssentialSet es = essential_points(ann, x, y, kTol);
    out.require(!es.is_exact(), "expected a region");
    const auto pts = es.region().sample(10000, kSeed);
    std::vector<Point> confirmed;
    for (Point e : pts) {
      if (is_essential(ann, e, x, y, kTol)) confirmed.push_back(e);
    }
    double spread = 0.0;
    for (std::size_t i = 0; i < confirmed.size() && spread <= 0.5; ++i) {
      for (std::size_t j = i + 1; j < confirmed.size(); ++j) spread = std::max(spread, distance(confirmed[i], confirmed[j]));
    }
    out.require(confirmed.size() >= 2, "fewer than two essential points in the sweep");
    out.require(spread > 0.5, "essential points within 0.5 of each other");
  });

  const double c3_budget_ms = 5000.0;
  const double c3_ms = criterion(3, "hypergroup axioms on 1000 triples, both models; strict breaks x in x#0", c3_budget_ms,
                                 [&](Outcome& out) {
    for (const auto& m : {seg, ann}) {
      each_draw(m.kind == ModelKind::Segment ? 31 : 32, [&](Stream& rng, std::size_t i) {
        const Point a = rng.point_in_box(10), b = rng.point_in_box(10), c = rng.point_in_box(10);
        record(out, check_weak_associativity(m, a, b, c, kTol, kPerSet, rng.next()), i);
        record(out, check_identity_inverse(m, a, kTol), i);
        record(out, check_retraction(m, a, b, kTol), i);
        record(out, check_commutativity(m, a, b, kTol), i);
      });
    }
    const CheckResult strict = check_retraction(seg_strict, {1, 0}, {0, 0}, kTol);
    out.require(!strict.passed, "strict retraction unexpectedly passed");
    out.require(strict.witness && strict.witness->note == "x not in x#0", "missing x not in x#0 witness");
  });

  criterion(4, "weak hypervector space axioms on 1000 draws, exact scalar associativity", 5000.0, [&](Outcome& out) {
    for (const auto& m : {seg, ann}) {
      const WeakHVS h{m};
      each_draw(m.kind == ModelKind::Segment ? 41 : 42, [&](Stream& rng, std::size_t i) {
        const Scalar a = rng.uniform(-10, 10), b = rng.uniform(-10, 10);
        const Point p = rng.point_in_box(10), q = rng.point_in_box(10);
        record(out, check_right_distributive(h, a, p, q, kTol, kPerSet, rng.next()), i);
        record(out, check_left_distributive(h, a, b, p, kTol, kPerSet, rng.next()), i);
        record(out, check_scalar_assoc(h, a, b, p, kTol), i);
        record(out, check_scalar_negation(h, a, p, kTol), i);
        record(out, check_unit(h, p, kTol), i);
        // Exactness: both sides are the same closed-form set, not merely overlapping.
        out.require(structurally_equal(scalar_lift(h, a, smul(h, b, p)), smul(h, a * b, p), kTol),
                    "a o (b o x) and (ab) o x differ structurally");
      });
    }
  });

  criterion(5, "inner product axioms, norm lemmas and induced norm on 1000 draws", 10000.0, [&](Outcome& out) {
    for (const auto& m : {seg, ann}) {
      const HyperIPSpace s{WeakHVS{m}};
      each_draw(m.kind == ModelKind::Segment ? 51 : 52, [&](Stream& rng, std::size_t i) {
        const Point p = rng.point_in_box(10), q = rng.point_in_box(10);
        const Scalar a = rng.uniform(-10, 10), b = rng.uniform(-10, 10);
        for (const auto& r : check_ip_axioms(s, p, q, kTol, 16, rng.next())) record(out, r, i);
        for (const auto& r : check_norm_consequences(s, p, q, kTol)) record(out, r, i);
        for (const auto& r : check_ip_consequences(s, a, b, p, q, kTol, 16, rng.next())) record(out, r, i);
        for (const auto& r : check_schwarz_and_sup(s, p, q, kTol)) record(out, r, i);
        for (const auto& r : check_induced_norm(s, p, q, a, kTol, 16, rng.next())) record(out, r, i);
      });
    }
  });

  criterion(6, "sup-form additivity fails on x#y; collapse probe fails unless y = -x", 100.0, [&](Outcome& out) {
    const HyperIPSpace s{WeakHVS{seg}};
    const auto v = classical_sum_axiom_witness(s, x, y, 0, kSeed, kTol, {{-1, -1}});
    out.require(v.has_value(), "no violation reported");
    if (v) {
      out.require(std::abs(v->lhs - (-1.0)) <= 1e-9, "sup inner is not -1");
      out.require(std::abs(v->rhs - (-2.0)) <= 1e-9, "(x,z)+(y,z) is not -2");
      out.require(std::abs((v->lhs - v->rhs) - 1.0) <= 1e-9, "gap is not 1");
    }
    out.require(!collapse_probe(s, x, y, kPerSet, kSeed, kTol).passed, "collapse probe passed on (x,y)");
    out.require(collapse_probe(s, x, -x, kPerSet, kSeed, kTol).passed, "collapse probe failed on y = -x");
  });

  criterion(7, "closed forms match a 10^5-point brute-force oracle on 100 hypersets", 10000.0, [&](Outcome& out) {
    constexpr std::size_t kOraclePoints = 100000;
    for (std::size_t i = 0; i < 100; ++i) {
      Stream rng(derive_seed(kSeed, 71, i));
      const double lo = rng.uniform(0.0, 0.9);
      const double hi = rng.uniform(lo + 0.05, 1.0);
      const bool lo_open = rng.uniform() < 0.5, hi_open = rng.uniform() < 0.5;
      const Point d = rng.point_in_box(10), z = rng.point_in_box(10);
      HyperSet s = HyperSet::singleton(d);
      switch (i % 4) {
        case 1: s = HyperSet::ray_segment(d, lo, hi, lo_open, hi_open); break;
        case 2: s = HyperSet::annulus(d, lo, hi, lo_open, hi_open); break;
        case 3: s = HyperSet::finite({d, rng.point_in_box(10), rng.point_in_box(10)}); break;
        default: break;
      }
      const std::string tag = " on hyperset " + std::to_string(i);

      // sup norm: attained iff the outer end is closed (always for points).
      const bool outer_closed = !(s.is<RaySegment>() && s.as<RaySegment>().hi_open) &&
                                !(s.is<Annulus>() && s.as<Annulus>().hi_open);
      const double sn = sup_norm(s), sn_ref = oracle::sup_norm(s, kOraclePoints);
      out.require(std::abs(sn - sn_ref) <= (outer_closed ? 1e-9 : 1e-3), "sup norm mismatch" + tag);

      const RealInterval img = inner_image(s, z);
      const auto ref = oracle::inner_image(s, z, kOraclePoints);
      out.require(std::abs(img.lo - ref.min) <= (img.lo_open ? 1e-3 : 1e-9), "inner image lo mismatch" + tag);
      out.require(std::abs(img.hi - ref.max) <= (img.hi_open ? 1e-3 : 1e-9), "inner image hi mismatch" + tag);
    }
  });

  // Each check run covers the criterion-3 workload and every other suite, so
  // the budget is twice the criterion-3 bound; the measured ratio is printed.
  const double c8_ms = criterion(8, "two check runs give byte-identical reports apart from wall time", 2.0 * c3_budget_ms,
                                 [&](Outcome& out) {
    const fs::path dir = fs::temp_directory_path() / "hyper_acceptance";
    fs::create_directories(dir);
    const int first = run_check(dir / "a.json");
    const int second = run_check(dir / "b.json");
    out.require(first == 0 && second == 0, "check exited nonzero");
    const std::string a = slurp(dir / "a.json"), b = slurp(dir / "b.json");
    out.require(!a.empty(), "empty report");
    out.require(strip_wall_time(a) == strip_wall_time(b), "reports differ");
    fs::remove_all(dir);
  });

  std::printf("   two check runs took %.1fx the measured criterion-3 time\n", c8_ms / c3_ms);
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
