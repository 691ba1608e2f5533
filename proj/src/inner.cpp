#include "hyper/inner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyper/rng.hpp"

namespace hyper {
namespace {

const Point kZero{0.0, 0.0};
constexpr double kBox = 10.0;

// Test functionals: the coordinate basis followed by n seeded draws.
std::vector<Point> functionals(std::size_t n, std::uint64_t seed) {
  std::vector<Point> zs{{1.0, 0.0}, {0.0, 1.0}};
  Stream rng(seed);
  for (std::size_t i = 0; i < n; ++i) zs.push_back(rng.point_in_box(kBox));
  return zs;
}

class ResultBuilder {
 public:
  ResultBuilder(Point x, Point y) : x_(x), y_(y) {}

  void pass(std::string id, std::size_t samples = 0) {
    out_.push_back(CheckResult::pass(std::move(id), std::nullopt, samples));
  }
  void fail(std::string id, std::string note, std::optional<Point> at = std::nullopt,
            std::vector<std::pair<std::string, Scalar>> scalars = {}, std::size_t samples = 0) {
    Witness w;
    w.inputs = {{"x", x_}, {"y", y_}};
    w.scalars = std::move(scalars);
    w.point = at;
    w.note = std::move(note);
    out_.push_back(CheckResult::fail(std::move(id), std::move(w), samples));
  }
  void expect(bool ok, std::string id, std::string note,
              std::vector<std::pair<std::string, Scalar>> scalars = {}) {
    if (ok) {
      pass(std::move(id));
    } else {
      fail(std::move(id), std::move(note), std::nullopt, std::move(scalars));
    }
  }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  Point x_;
  Point y_;
  std::vector<CheckResult> out_;
};

// Sampled members of `set` whose square norm exceeds `bound` by more than eps.
std::optional<Point> dominance_breach(const HyperIPSpace& s, const HyperSet& set, Scalar bound,
                                      std::size_t n, std::uint64_t seed, Tolerance tol) {
  if (sup_norm(set) * sup_norm(set) > bound + tol.eps()) return sample(set, 1, seed).front();
  for (const Point& u : sample(set, n, seed)) {
    if (ip(s, u, u) > bound + tol.eps()) return u;
  }
  return std::nullopt;
}

}  // namespace

Scalar ip(const HyperIPSpace&, Point x, Point y) { return dot(x, y); }

Scalar induced_norm(const HyperIPSpace& s, Point x) { return std::sqrt(ip(s, x, x)); }

Point canonical_essential_sharp(const HyperIPSpace&, Point x, Point y) { return x + y; }

std::vector<CheckResult> check_ip_axioms(const HyperIPSpace& s, Point x, Point y, Tolerance tol,
                                         std::size_t n, std::uint64_t seed) {
  const double eps = tol.eps();
  const HypergroupModel& g = s.group();
  Stream rng(derive_seed(seed, 0));
  const Scalar a = rng.uniform(-kBox, kBox);
  const auto zs = functionals(n, derive_seed(seed, 1));
  ResultBuilder r(x, y);

  const auto positive = [&](Point v) { return v.is_zero() || ip(s, v, v) > 0.0; };
  r.expect(positive(x) && positive(y), "ip.positivity", "(v, v) <= 0 for v != 0");

  const auto definite = [&](Point v) { return (ip(s, v, v) == 0.0) == v.is_zero(); };
  r.expect(ip(s, kZero, kZero) == 0.0 && definite(x) && definite(y), "ip.definiteness",
           "(v, v) = 0 does not match v = 0");

  const Point e = canonical_essential_sharp(s, x, y);
  if (!is_essential(g, e, x, y, tol)) {
    r.fail("ip.sum_additivity", "x + y is not an essential point of x#y", e);
  } else {
    const auto bad = std::find_if(zs.begin(), zs.end(), [&](Point z) {
      return std::abs(ip(s, x, z) + ip(s, y, z) - ip(s, e, z)) > eps;
    });
    if (bad == zs.end()) {
      r.pass("ip.sum_additivity", zs.size());
    } else {
      r.fail("ip.sum_additivity", "(x, z) + (y, z) != (e, z)", *bad);
    }
  }

  r.expect(std::abs(ip(s, y, x) - conj(ip(s, x, y))) <= eps, "ip.conjugate_symmetry",
           "(y, x) != conj((x, y))");

  const Point ea = essential_scalar(s.space, a, x);
  if (a != 0.0 && !is_essential_scalar(s.space, ea, a, x, tol)) {
    r.fail("ip.scalar_homogeneity", "a x is not an essential point of a o x", ea, {{"a", a}});
  } else {
    const auto bad = std::find_if(zs.begin(), zs.end(), [&](Point z) {
      return std::abs(a * ip(s, x, z) - ip(s, ea, z)) > eps;
    });
    if (bad == zs.end()) {
      r.pass("ip.scalar_homogeneity", zs.size());
    } else {
      r.fail("ip.scalar_homogeneity", "a (x, z) != (e, z)", *bad, {{"a", a}});
    }
  }

  if (auto u = dominance_breach(s, sharp(g, x, y), ip(s, e, e), n, derive_seed(seed, 2), tol)) {
    r.fail("ip.sum_dominance", "(u, u) > (e, e) for u in x#y", *u);
  } else {
    r.pass("ip.sum_dominance", n);
  }
  if (auto u = dominance_breach(s, smul(s.space, 1.0, x), ip(s, x, x), n, derive_seed(seed, 3), tol)) {
    r.fail("ip.unit_dominance", "(u, u) > (x, x) for u in 1 o x", *u);
  } else {
    r.pass("ip.unit_dominance", n);
  }
  return r.take();
}

std::vector<CheckResult> check_norm_axioms(const HyperIPSpace& s, Point x, Point y, Scalar a,
                                           Tolerance tol) {
  const double eps = tol.eps();
  const auto norm = [&](Point v) { return induced_norm(s, v); };
  ResultBuilder r(x, y);
  r.expect(norm(kZero) == 0.0 && (norm(x) == 0.0) == x.is_zero() && (norm(y) == 0.0) == y.is_zero(),
           "norm.zero", "|v| = 0 does not match v = 0");
  const Scalar tri = sup_norm(sharp(s.group(), x, y));
  r.expect(tri <= norm(x) + norm(y) + eps, "norm.triangle_sup", "sup|x#y| > |x| + |y|",
           {{"sup", tri}});
  const Scalar hom = sup_norm(smul(s.space, a, x));
  r.expect(std::abs(hom - std::abs(a) * norm(x)) <= eps, "norm.homogeneity_sup",
           "sup|a o x| != |a| |x|", {{"a", a}, {"sup", hom}});
  return r.take();
}

std::vector<CheckResult> check_norm_consequences(const HyperIPSpace& s, Point x, Point y,
                                                 Tolerance tol) {
  const double eps = tol.eps();
  const auto norm = [&](Point v) { return induced_norm(s, v); };
  ResultBuilder r(x, y);
  r.expect(std::abs(norm(-y) - norm(y)) <= eps, "norm.negation_invariance", "|-y| != |y|");
  const Scalar with_zero = sup_norm(sharp(s.group(), x, kZero));
  r.expect(std::abs(with_zero - norm(x)) <= eps, "norm.sup_with_zero", "sup|x#0| != |x|",
           {{"sup", with_zero}});
  const Scalar diff = sup_norm(sharp(s.group(), x, -y));
  r.expect(std::abs(norm(x) - norm(y)) <= diff + eps, "norm.reverse_triangle",
           "||x| - |y|| > sup|x#(-y)|", {{"sup", diff}});
  return r.take();
}

bool ball_contains(const HyperIPSpace& s, Point center, Scalar r, Point y) {
  if (!(r > 0.0)) throw std::invalid_argument("hyperball radius must be positive");
  return sup_norm(sharp(s.group(), y, -center)) < r;
}

std::vector<CheckResult> check_ip_consequences(const HyperIPSpace& s, Scalar a, Scalar b, Point x,
                                               Point y, Tolerance tol, std::size_t n,
                                               std::uint64_t seed) {
  const double eps = tol.eps();
  ResultBuilder r(x, y);
  r.expect(std::abs(ip(s, kZero, x)) <= eps && std::abs(ip(s, x, kZero)) <= eps, "ip.zero",
           "(0, x) or (x, 0) nonzero");
  const Scalar xy = ip(s, x, y);
  r.expect(std::abs(ip(s, -x, y) + xy) <= eps && std::abs(ip(s, x, -y) + xy) <= eps, "ip.negation",
           "(-x, y) or (x, -y) differs from -(x, y)");
  const Point ey = essential_scalar(s.space, a, y);
  r.expect(std::abs(ip(s, x, ey) - conj(a) * xy) <= eps, "ip.essential_scalar_conjugation",
           "(x, e) != conj(a) (x, y) for the essential point e of a o y", {{"a", a}});

  if (auto u = dominance_breach(s, smul(s.space, a, x), a * a * ip(s, x, x), n, seed, tol)) {
    r.fail("ip.scalar_dominance", "(u, u) > a^2 (x, x) for u in a o x", *u, {{"a", a}}, n);
  } else {
    r.pass("ip.scalar_dominance", n);
  }

  const RealInterval lhs = scale_interval(a, inner_image(smul(s.space, b, x), y));
  const RealInterval rhs = inner_image(smul(s.space, a * b, x), y);
  r.expect(interval_equal(lhs, rhs, tol), "ip.image_scaling", "a (b o x, y) != (ab o x, y)",
           {{"a", a}, {"b", b}, {"lhs.lo", lhs.lo}, {"lhs.hi", lhs.hi}, {"rhs.lo", rhs.lo},
            {"rhs.hi", rhs.hi}});
  return r.take();
}

std::vector<CheckResult> check_schwarz_and_sup(const HyperIPSpace& s, Point x, Point y,
                                               Tolerance tol) {
  const double eps = tol.eps();
  ResultBuilder r(x, y);
  const Scalar lhs = std::abs(ip(s, x, y));
  const Scalar rhs = induced_norm(s, x) * induced_norm(s, y);
  r.expect(lhs <= rhs + eps, "ip.cauchy_schwarz", "|(x, y)| > |x| |y|", {{"lhs", lhs}, {"rhs", rhs}});
  const Scalar sup = sup_norm(sharp(s.group(), x, y));
  const Scalar ess = induced_norm(s, canonical_essential_sharp(s, x, y));
  r.expect(std::abs(sup - ess) <= eps, "ip.sup_norm_essential", "sup|x#y| != |e|",
           {{"sup", sup}, {"|e|", ess}});
  return r.take();
}

std::vector<CheckResult> check_induced_norm(const HyperIPSpace& s, Point x, Point y, Scalar a,
                                            Tolerance tol, std::size_t n, std::uint64_t seed) {
  const double eps = tol.eps();
  const auto norm = [&](Point v) { return induced_norm(s, v); };
  ResultBuilder r(x, y);

  // Zero law through definiteness of the form.
  const auto zero_law = [&](Point v) { return (ip(s, v, v) == 0.0) == (norm(v) == 0.0) && (norm(v) == 0.0) == v.is_zero(); };
  r.expect(zero_law(x) && zero_law(y) && norm(kZero) == 0.0, "induced_norm.zero",
           "sqrt((v, v)) = 0 does not match v = 0");

  const Point e = canonical_essential_sharp(s, x, y);
  const Scalar ee = ip(s, e, e);
  const Scalar expanded = ip(s, x, x) + ip(s, x, y) + ip(s, y, x) + ip(s, y, y);
  const Scalar bound = (norm(x) + norm(y)) * (norm(x) + norm(y));
  if (std::abs(ee - expanded) > eps) {
    r.fail("induced_norm.triangle_chain", "(e, e) != (x, x) + (x, y) + (y, x) + (y, y)", e,
           {{"(e,e)", ee}, {"expanded", expanded}});
  } else if (expanded > bound + eps) {
    r.fail("induced_norm.triangle_chain", "(e, e) > (|x| + |y|)^2", e, {{"(e,e)", ee}, {"bound", bound}});
  } else if (auto u = dominance_breach(s, sharp(s.group(), x, y), ee, n, seed, tol)) {
    r.fail("induced_norm.triangle_chain", "(u, u) > (e, e) for u in x#y", *u);
  } else {
    r.pass("induced_norm.triangle_chain", n);
  }

  // |u| <= |a| |x| on a o x with the bound attained at the outer end.
  const HyperSet ax = smul(s.space, a, x);
  const Scalar target = std::abs(a) * norm(x);
  bool ok = std::abs(sup_norm(ax) - target) <= eps;
  for (const Point& u : sample(ax, n, derive_seed(seed, 1))) ok = ok && norm(u) <= target + eps;
  r.expect(ok, "induced_norm.homogeneity", "sup|a o x| != |a| |x| for the induced norm", {{"a", a}});
  return r.take();
}

std::optional<Violation> classical_sum_axiom_witness(const HyperIPSpace& s, Point x, Point y,
                                                     std::size_t n, std::uint64_t seed,
                                                     Tolerance tol, const std::vector<Point>& probes) {
  const HyperSet xy = sharp(s.group(), x, y);
  const auto test = [&](Point z) -> std::optional<Violation> {
    const Scalar lhs = sup_inner(xy, z);
    const Scalar rhs = ip(s, x, z) + ip(s, y, z);
    if (std::abs(lhs - rhs) > tol.eps()) return Violation{x, y, z, lhs, rhs};
    return std::nullopt;
  };
  for (const Point& z : probes) {
    if (auto v = test(z)) return v;
  }
  Stream rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    if (auto v = test(rng.point_in_box(kBox))) return v;
  }
  return std::nullopt;
}

CheckResult collapse_probe(const HyperIPSpace& s, Point x, Point y, std::size_t n,
                           std::uint64_t seed, Tolerance tol) {
  const std::string id = "probe.collapse";
  const auto us = sample(sharp(s.group(), x, y), n, derive_seed(seed, 0));
  Stream rng(derive_seed(seed, 1));
  for (std::size_t i = 0; i < n; ++i) {
    const Point z = rng.point_in_box(kBox);
    const auto [lo, hi] = std::minmax_element(us.begin(), us.end(), [&](Point p, Point q) {
      return ip(s, p, z) < ip(s, q, z);
    });
    if (ip(s, *hi, z) - ip(s, *lo, z) > tol.eps()) {
      Witness w;
      w.inputs = {{"x", x}, {"y", y}, {"z", z}, {"u", *lo}, {"v", *hi}};
      w.scalars = {{"(u,z)", ip(s, *lo, z)}, {"(v,z)", ip(s, *hi, z)}};
      w.note = "members of x#y differ under the functional (., z)";
      return CheckResult::fail(id, std::move(w), (i + 1) * us.size());
    }
  }
  return CheckResult::pass(id, std::nullopt, n * us.size());
}

}  // namespace hyper
