#include "hyper/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>

#include "hyper/rng.hpp"
#include "json.hpp"

namespace hyper {
namespace {

using Json = nlohmann::ordered_json;
using CaseResults = std::vector<CheckResult>;
using Kernel = std::function<CaseResults(std::size_t index, std::uint64_t seed)>;

constexpr double kBox = 10.0;
constexpr std::size_t kWitnessesKept = 3;

struct Group {
  std::string name;
  Kernel kernel;
  bool expected_failure = false;
};

CaseResults guarded(const Group& g, std::size_t index, std::uint64_t seed) {
  try {
    return g.kernel(index, seed);
  } catch (const std::exception& e) {
    Witness w;
    w.note = std::string("exception: ") + e.what();
    return {CheckResult::fail(g.name + ".error", std::move(w))};
  }
}

// Data-parallel over cases; results land in index order either way.
std::vector<CaseResults> run_cases(const Group& g, std::size_t count, std::uint64_t seed,
                                   std::size_t group_index, Execution exec) {
  std::vector<CaseResults> out(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      out[idx] = guarded(g, idx, derive_seed(seed, group_index, idx));
    }
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      out[idx] = guarded(g, idx, derive_seed(seed, group_index, idx));
    }
  }
  return out;
}

void aggregate(const std::vector<CaseResults>& cases, std::vector<SuiteSummary>& into) {
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < into.size(); ++i) slot[into[i].id] = i;
  for (const auto& results : cases) {
    for (const auto& r : results) {
      auto it = slot.find(r.axiom_id);
      if (it == slot.end()) {
        it = slot.emplace(r.axiom_id, into.size()).first;
        into.push_back({r.axiom_id, std::string(suite_description(r.axiom_id)), 0, 0, {}});
      }
      SuiteSummary& s = into[it->second];
      if (r.passed) {
        ++s.pass;
      } else {
        ++s.fail;
        if (s.witnesses.size() < kWitnessesKept && r.witness) s.witnesses.push_back(*r.witness);
      }
    }
  }
}

// Inputs for one case. A few indices are pinned to degenerate configurations
// so that the zero-sum and zero-scalar branches are exercised every run.
struct CaseInputs {
  Point x, y, z;
  Scalar a, b;
};

CaseInputs draw(std::size_t index, std::uint64_t seed) {
  Stream rng(seed);
  CaseInputs c{rng.point_in_box(kBox), rng.point_in_box(kBox), rng.point_in_box(kBox),
               rng.uniform(-kBox, kBox), rng.uniform(-kBox, kBox)};
  switch (index % 100) {
    case 1: c.y = -c.x; break;
    case 2: c.z = -c.y; break;
    case 3: c.x = {0.0, 0.0}; break;
    case 4: c.a = 0.0; break;
    case 5: c.b = -c.a; break;
    case 6: c.y = c.x * 0.5; break;  // collinear
    default: break;
  }
  return c;
}

std::vector<Group> build_groups(const RunConfig& cfg) {
  const HypergroupModel m = cfg.model();
  const HyperIPSpace s = cfg.ip_space();
  const WeakHVS& h = s.space;
  const Tolerance tol(cfg.eps);
  const std::size_t n = cfg.per_set_samples;

  std::vector<Group> g;
  g.push_back({"hypergroup", [=](std::size_t i, std::uint64_t seed) {
                 const auto c = draw(i, seed);
                 return CaseResults{check_weak_associativity(m, c.x, c.y, c.z, tol, n, seed),
                                    check_identity_inverse(m, c.x, tol),
                                    check_retraction(m, c.x, c.y, tol),
                                    check_commutativity(m, c.x, c.y, tol)};
               }});

  g.push_back({"essential", [=](std::size_t i, std::uint64_t seed) {
                 const auto c = draw(i, seed);
                 CaseResults out;
                 Witness w;
                 w.inputs = {{"x", c.x}, {"y", c.y}};
                 if (m.endpoint != EndpointConvention::UpperClosed) {
                   // Without the outer end x + y, essential points need not exist.
                   if (is_essential(m, c.x + c.y, c.x, c.y, tol)) {
                     out.push_back(CheckResult::pass("essential.nonempty"));
                   } else {
                     w.point = c.x + c.y;
                     w.note = "x + y is not essential under the strict convention";
                     out.push_back(CheckResult::fail("essential.nonempty", w));
                   }
                   return out;
                 }
                 const EssentialSet es = essential_points(m, c.x, c.y, tol);
                 const std::vector<Point> members =
                     es.is_exact() ? es.exact() : es.region().sample(256, seed);
                 out.push_back(members.empty() ? CheckResult::fail("essential.nonempty", w)
                                               : CheckResult::pass("essential.nonempty"));
                 const auto bad = std::find_if(members.begin(), members.end(), [&](Point e) {
                   return !is_essential(m, e, c.x, c.y, tol);
                 });
                 if (bad == members.end()) {
                   out.push_back(CheckResult::pass("essential.consistency", std::nullopt, members.size()));
                 } else {
                   Witness bw = w;
                   bw.point = *bad;
                   bw.note = "returned member fails the essential-point predicate";
                   out.push_back(CheckResult::fail("essential.consistency", bw, members.size()));
                 }
                 if (m.kind == ModelKind::Segment) {
                   // Unique essential point when x and y span the plane.
                   if (std::abs(cross(c.x, c.y)) > tol.eps() * std::max(1.0, norm2(c.x) * norm2(c.y))) {
                     for (const Point& e : sample(sharp(m, c.x, c.y), n, derive_seed(seed, 7))) {
                       if (is_essential(m, e, c.x, c.y, tol) && distance(e, c.x + c.y) > tol.eps()) {
                         Witness uw = w;
                         uw.point = e;
                         uw.note = "second essential point for independent x, y";
                         out.push_back(CheckResult::fail("essential.uniqueness", uw, n));
                         return out;
                       }
                     }
                     out.push_back(CheckResult::pass("essential.uniqueness", std::nullopt, n));
                   }
                 } else {
                   const auto outer = annulus_outer_essentials(c.x, c.y);
                   const bool ok = std::all_of(outer.begin(), outer.end(), [&](Point e) {
                     return is_essential(m, e, c.x, c.y, tol);
                   });
                   if (ok || (c.x + c.y).is_zero()) {
                     out.push_back(CheckResult::pass("essential.outer_points", std::nullopt, outer.size()));
                   } else {
                     Witness ow = w;
                     ow.note = "outer-circle candidate is not essential";
                     out.push_back(CheckResult::fail("essential.outer_points", ow, outer.size()));
                   }
                 }
                 return out;
               }});

  g.push_back({"hvs", [=](std::size_t i, std::uint64_t seed) {
                 const auto c = draw(i, seed);
                 return CaseResults{check_right_distributive(h, c.a, c.x, c.y, tol, n, derive_seed(seed, 1)),
                                    check_left_distributive(h, c.a, c.b, c.x, tol, n, derive_seed(seed, 2)),
                                    check_scalar_assoc(h, c.a, c.b, c.x, tol),
                                    check_scalar_negation(h, c.a, c.x, tol), check_unit(h, c.x, tol)};
               }});

  g.push_back({"essential_scalar", [=](std::size_t i, std::uint64_t seed) {
                 const auto c = draw(i, seed);
                 const Point e = essential_scalar(h, c.a, c.x);
                 Witness w;
                 w.inputs = {{"x", c.x}};
                 w.scalars = {{"a", c.a}};
                 if (c.a == 0.0) {
                   if (e.is_zero()) return CaseResults{CheckResult::pass("hvs.essential_scalar")};
                   w.note = "essential point of 0 o x is not 0";
                   return CaseResults{CheckResult::fail("hvs.essential_scalar", w)};
                 }
                 if (!is_essential_scalar(h, e, c.a, c.x, tol)) {
                   w.point = e;
                   w.note = "a x is not essential for a o x";
                   return CaseResults{CheckResult::fail("hvs.essential_scalar", w)};
                 }
                 // Uniqueness along the ray: only t = 1 recovers x.
                 for (std::size_t k = 1; k <= 32; ++k) {
                   const Point cand = e * (static_cast<double>(k) / 32.0);
                   if (is_essential_scalar(h, cand, c.a, c.x, tol) && distance(cand, e) > tol.eps()) {
                     w.point = cand;
                     w.note = "second essential point of a o x";
                     return CaseResults{CheckResult::fail("hvs.essential_scalar", w, k)};
                   }
                 }
                 return CaseResults{CheckResult::pass("hvs.essential_scalar", e, 33)};
               }});

  g.push_back({"norm", [=](std::size_t i, std::uint64_t seed) {
                 const auto c = draw(i, seed);
                 auto out = check_norm_axioms(s, c.x, c.y, c.a, tol);
                 auto more = check_norm_consequences(s, c.x, c.y, tol);
                 out.insert(out.end(), more.begin(), more.end());
                 return out;
               }});

  g.push_back({"ball", [=](std::size_t i, std::uint64_t seed) {
                 const auto c = draw(i, seed);
                 Stream rng(derive_seed(seed, 3));
                 const Scalar r = rng.uniform(0.5, 2.0 * kBox);
                 const Point center = c.z;
                 const double d = distance(c.y, center);
                 Witness w;
                 w.inputs = {{"center", center}, {"y", c.y}};
                 w.scalars = {{"r", r}};
                 if (!ball_contains(s, center, r, center)) {
                   w.note = "center outside its own ball";
                   return CaseResults{CheckResult::fail("ball.membership", w)};
                 }
                 if (std::abs(d - r) > tol.eps() && ball_contains(s, center, r, c.y) != (d < r)) {
                   w.note = "ball membership disagrees with |y - center| < r";
                   return CaseResults{CheckResult::fail("ball.membership", w)};
                 }
                 return CaseResults{CheckResult::pass("ball.membership")};
               }});

  g.push_back({"ip_axioms", [=](std::size_t i, std::uint64_t seed) {
                 const auto c = draw(i, seed);
                 return check_ip_axioms(s, c.x, c.y, tol, n, derive_seed(seed, 1));
               }});

  g.push_back({"ip_consequences", [=](std::size_t i, std::uint64_t seed) {
                 const auto c = draw(i, seed);
                 auto out = check_ip_consequences(s, c.a, c.b, c.x, c.y, tol, n, derive_seed(seed, 1));
                 auto more = check_schwarz_and_sup(s, c.x, c.y, tol);
                 out.insert(out.end(), more.begin(), more.end());
                 // Equality case of Cauchy-Schwarz on a collinear pair.
                 const Point cx = c.x * c.a;
                 const double gap = std::abs(std::abs(ip(s, c.x, cx)) - induced_norm(s, c.x) * induced_norm(s, cx));
                 if (gap <= tol.eps()) {
                   out.push_back(CheckResult::pass("ip.cauchy_schwarz_equality"));
                 } else {
                   Witness w;
                   w.inputs = {{"x", c.x}};
                   w.scalars = {{"c", c.a}, {"gap", gap}};
                   w.note = "|(x, cx)| != |x| |cx|";
                   out.push_back(CheckResult::fail("ip.cauchy_schwarz_equality", w));
                 }
                 return out;
               }});

  g.push_back({"induced_norm", [=](std::size_t i, std::uint64_t seed) {
                 const auto c = draw(i, seed);
                 return check_induced_norm(s, c.x, c.y, c.a, tol, n, derive_seed(seed, 1));
               }});

  g.push_back({"probe.classical_sum_axiom",
               [=](std::size_t i, std::uint64_t seed) {
                 const auto c = draw(i, seed);
                 const auto v = classical_sum_axiom_witness(s, c.x, c.y, n, derive_seed(seed, 1), tol);
                 if (!v) return CaseResults{CheckResult::pass("probe.classical_sum_axiom")};
                 Witness w;
                 w.inputs = {{"x", v->x}, {"y", v->y}, {"z", v->z}};
                 w.scalars = {{"sup(x#y,z)", v->lhs}, {"(x,z)+(y,z)", v->rhs}};
                 w.note = "sup-form additivity fails on a multivalued sum";
                 return CaseResults{CheckResult::fail("probe.classical_sum_axiom", w)};
               },
               true});

  g.push_back({"probe.collapse",
               [=](std::size_t i, std::uint64_t seed) {
                 const auto c = draw(i, seed);
                 return CaseResults{collapse_probe(s, c.x, c.y, n, derive_seed(seed, 1), tol)};
               },
               true});
  return g;
}

Json point_json(Point p) { return Json::array({p.x, p.y}); }

Json witness_json(const Witness& w) {
  Json j = Json::object();
  Json inputs = Json::object();
  for (const auto& [name, p] : w.inputs) inputs[name] = point_json(p);
  j["inputs"] = std::move(inputs);
  if (!w.scalars.empty()) {
    Json scalars = Json::object();
    for (const auto& [name, v] : w.scalars) scalars[name] = v;
    j["scalars"] = std::move(scalars);
  }
  if (w.point) j["point"] = point_json(*w.point);
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

Json summary_json(const SuiteSummary& s) {
  Json witnesses = Json::array();
  for (const auto& w : s.witnesses) witnesses.push_back(witness_json(w));
  return Json{{"id", s.id},
              {"paperRef", s.description},
              {"pass", s.pass},
              {"fail", s.fail},
              {"witnesses", std::move(witnesses)}};
}

}  // namespace

void RunConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must satisfy 0 < alpha < 1");
  if (samples < 1) throw ConfigError("samples must be at least 1");
  if (per_set_samples < 1) throw ConfigError("per-set samples must be at least 1");
  if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("eps must satisfy 0 < eps < 1");
}

bool SuiteReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteSummary& s) { return s.fail == 0; });
}

const SuiteSummary* SuiteReport::find(std::string_view id) const {
  for (const auto* list : {&suites, &expected_failures}) {
    for (const auto& s : *list) {
      if (s.id == id) return &s;
    }
  }
  return nullptr;
}

SuiteReport run_suite(const RunConfig& cfg, Execution exec) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.config = cfg;
  const auto groups = build_groups(cfg);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto cases = run_cases(groups[gi], cfg.samples, cfg.seed, gi, exec);
    aggregate(cases, groups[gi].expected_failure ? report.expected_failures : report.suites);
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_json(const SuiteReport& report, bool with_wall_time) {
  const RunConfig& c = report.config;
  Json j;
  j["schemaVersion"] = kReportSchemaVersion;
  j["version"] = std::string(kLibraryVersion);
  j["config"] = Json{{"space", std::string(to_string(c.space))},
                     {"alpha", c.alpha},
                     {"endpoint", std::string(to_string(c.endpoint))},
                     {"samples", c.samples},
                     {"perSetSamples", c.per_set_samples},
                     {"seed", c.seed},
                     {"eps", c.eps}};
  j["allPassed"] = report.all_passed();
  Json suites = Json::array();
  for (const auto& s : report.suites) suites.push_back(summary_json(s));
  j["suites"] = std::move(suites);
  Json expected = Json::array();
  for (const auto& s : report.expected_failures) expected.push_back(summary_json(s));
  j["expectedFailures"] = std::move(expected);
  if (with_wall_time) j["wallTimeMs"] = report.wall_time_ms;
  return j.dump(2) + "\n";
}

std::string_view suite_description(std::string_view id) {
  static const std::map<std::string_view, std::string_view> table{
      {"hypergroup.weak_associativity", "hypergroup: (x#y)#z and x#(y#z) intersect"},
      {"hypergroup.identity_inverse", "hypergroup: unique zero and unique inverse -x"},
      {"hypergroup.retraction", "hypergroup: x in ((x#y)#-y) and x in x#0"},
      {"hypergroup.commutativity", "commutative hypergroup: x#y = y#x"},
      {"essential.nonempty", "existence of e in x#y with x in e#(-y)"},
      {"essential.consistency", "every returned essential point satisfies its definition"},
      {"essential.uniqueness", "segment model: x+y is the unique essential point"},
      {"essential.outer_points", "annulus model: outer-circle essential points"},
      {"hvs.right_distributive", "weak hypervector space: a o (x#y) meets a o x # a o y"},
      {"hvs.left_distributive", "weak hypervector space: (a+b) o x meets a o x # b o x"},
      {"hvs.scalar_associativity", "weak hypervector space: a o (b o x) = (ab) o x exactly"},
      {"hvs.scalar_negation", "weak hypervector space: a o (-x) = (-a) o x = -(a o x)"},
      {"hvs.unit", "weak hypervector space: x in 1 o x"},
      {"hvs.essential_scalar", "essential point of a o x is a x and unique"},
      {"norm.zero", "norm: |x| = 0 iff x = 0"},
      {"norm.triangle_sup", "norm: sup|x#y| <= |x| + |y|"},
      {"norm.homogeneity_sup", "norm: sup|a o x| = |a| |x|"},
      {"norm.negation_invariance", "norm property: |-y| = |y|"},
      {"norm.sup_with_zero", "norm property: sup|x#0| = |x|"},
      {"norm.reverse_triangle", "norm property: ||x| - |y|| <= sup|x#-y|"},
      {"ball.membership", "open hyperball: y in B_r(c) iff sup|y#-c| < r"},
      {"ip.positivity", "inner product: (x,x) > 0 for x != 0"},
      {"ip.definiteness", "inner product: (x,x) = 0 iff x = 0"},
      {"ip.sum_additivity", "inner product: (x,z) + (y,z) = (e,z) for an essential e of x#y"},
      {"ip.conjugate_symmetry", "inner product: (y,x) = conj((x,y))"},
      {"ip.scalar_homogeneity", "inner product: a (x,y) = (e,y) for an essential e of a o x"},
      {"ip.sum_dominance", "inner product: (u,u) <= (e,e) for u in x#y"},
      {"ip.unit_dominance", "inner product: (u,u) <= (x,x) for u in 1 o x"},
      {"ip.zero", "inner product property: (0,x) = (x,0) = 0"},
      {"ip.negation", "inner product property: (-x,y) = (x,-y) = -(x,y)"},
      {"ip.essential_scalar_conjugation", "inner product property: (x, e of a o y) = conj(a) (x,y)"},
      {"ip.scalar_dominance", "inner product property: (u,u) <= a^2 (x,x) for u in a o x"},
      {"ip.image_scaling", "inner product property: a (b o x, y) = (ab o x, y)"},
      {"ip.cauchy_schwarz", "induced norm: |(x,y)| <= |x| |y|"},
      {"ip.sup_norm_essential", "induced norm: sup|x#y| = |e| for the essential point"},
      {"ip.cauchy_schwarz_equality", "induced norm: equality in Cauchy-Schwarz on collinear pairs"},
      {"induced_norm.zero", "sqrt((x,x)) is a norm: zero law"},
      {"induced_norm.triangle_chain", "sqrt((x,x)) is a norm: (u,u) <= (e,e) <= (|x|+|y|)^2"},
      {"induced_norm.homogeneity", "sqrt((x,x)) is a norm: sup|a o x| = |a| |x|"},
      {"probe.classical_sum_axiom", "sup(x#y,z) = (x,z) + (y,z) forces singleton sums; violated here"},
      {"probe.collapse", "all members of x#y agree under every functional (singleton collapse)"},
  };
  const auto it = table.find(id);
  return it == table.end() ? std::string_view("unclassified check") : it->second;
}

}  // namespace hyper
