#include "hyper/hyperspace.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hyper/rng.hpp"

namespace hyper {
namespace {

const Point kZero{0.0, 0.0};

Witness scalar_witness(std::initializer_list<std::pair<std::string, Scalar>> scalars,
                       std::initializer_list<std::pair<std::string, Point>> points, std::string note) {
  Witness w;
  w.scalars = scalars;
  w.inputs = points;
  w.note = std::move(note);
  return w;
}

// Samples of a o x # b o x style sets: k members of p # q for pairs drawn
// from the two sampled factors.
std::vector<Point> sample_pair_sums(const HypergroupModel& g, const HyperSet& left,
                                    const HyperSet& right, std::size_t n, std::uint64_t seed) {
  const auto ps = sample(left, n, derive_seed(seed, 0));
  const auto qs = sample(right, n, derive_seed(seed, 1));
  std::vector<Point> out;
  std::size_t pair = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < qs.size() && pair < 4096; ++j, ++pair) {
      const auto part = sample(sharp(g, ps[i], qs[j]), 4, derive_seed(seed, 2, pair));
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return out;
}

// Shared tail of both distributive checks: `closed_side` is the side with a
// closed form, `chain` says whether `candidate` was reached on the sampled side.
CheckResult distributive_result(const std::string& id, const HypergroupModel& g,
                                const HyperSet& closed_side, const HyperSet& f1, const HyperSet& f2,
                                Point candidate, bool chain, Witness wit, Tolerance tol,
                                std::size_t n, std::uint64_t seed) {
  if (chain && contains(closed_side, candidate, tol)) return CheckResult::pass(id, candidate, 1);
  const auto pts = sample_pair_sums(g, f1, f2, n, seed);
  std::size_t used = 1;
  for (const Point& p : pts) {
    ++used;
    if (contains(closed_side, p, tol)) return CheckResult::pass(id, p, used);
  }
  wit.point = candidate;
  return CheckResult::fail(id, std::move(wit), used);
}

}  // namespace

HyperSet smul(const WeakHVS& h, Scalar a, Point x) {
  const Point ax = x * a;
  if (ax.is_zero()) return HyperSet::singleton(kZero);
  return HyperSet::ray_segment(ax, 0.0, 1.0, true, h.upper_open());
}

HyperSet scalar_lift(const WeakHVS& h, Scalar a, const HyperSet& set) {
  if (a == 0.0) return HyperSet::singleton(kZero);
  if (set.is<Singleton>()) return smul(h, a, set.as<Singleton>().p);
  // (0, 1] * (lo, hi] = (0, hi]; the origin stays in only if lo = 0 was.
  if (set.is<RaySegment>()) {
    const auto& v = set.as<RaySegment>();
    return HyperSet::ray_segment(v.target * a, 0.0, v.hi, !(v.lo == 0.0 && !v.lo_open),
                                 v.hi_open || h.upper_open());
  }
  if (set.is<Annulus>()) {
    const auto& v = set.as<Annulus>();
    return HyperSet::annulus(v.dir * a, 0.0, v.hi, !(v.lo == 0.0 && !v.lo_open),
                             v.hi_open || h.upper_open());
  }
  throw std::invalid_argument("scalar_lift has no closed form for a finite set");
}

CheckResult check_right_distributive(const WeakHVS& h, Scalar a, Point x, Point y, Tolerance tol,
                                     std::size_t n, std::uint64_t seed) {
  const HyperSet ax = smul(h, a, x);
  const HyperSet ay = smul(h, a, y);
  const Point p = x * a;
  const Point q = y * a;
  const Point w = (x + y) * a;
  const bool chain = contains(ax, p, tol) && contains(ay, q, tol) &&
                     contains(sharp(h.group, p, q), w, tol);
  return distributive_result("hvs.right_distributive", h.group,
                             scalar_lift(h, a, sharp(h.group, x, y)), ax, ay, w, chain,
                             scalar_witness({{"a", a}}, {{"x", x}, {"y", y}},
                                            "no common point of a o (x#y) and a o x # a o y found"),
                             tol, n, seed);
}

CheckResult check_left_distributive(const WeakHVS& h, Scalar a, Scalar b, Point x, Tolerance tol,
                                    std::size_t n, std::uint64_t seed) {
  const HyperSet ax = smul(h, a, x);
  const HyperSet bx = smul(h, b, x);
  const Point p = x * a;
  const Point q = x * b;
  const Point w = x * (a + b);
  const bool chain = contains(ax, p, tol) && contains(bx, q, tol) &&
                     contains(sharp(h.group, p, q), w, tol);
  return distributive_result("hvs.left_distributive", h.group, smul(h, a + b, x), ax, bx, w,
                             chain,
                             scalar_witness({{"a", a}, {"b", b}}, {{"x", x}},
                                            "no common point of (a+b) o x and a o x # b o x found"),
                             tol, n, seed);
}

CheckResult check_scalar_assoc(const WeakHVS& h, Scalar a, Scalar b, Point x, Tolerance tol) {
  const std::string id = "hvs.scalar_associativity";
  const HyperSet bx = smul(h, b, x);
  const HyperSet lhs = scalar_lift(h, a, bx);
  const HyperSet rhs = smul(h, a * b, x);
  const auto fail = [&](std::string note, std::optional<Point> at = std::nullopt) {
    Witness w = scalar_witness({{"a", a}, {"b", b}}, {{"x", x}}, std::move(note));
    w.point = at;
    return CheckResult::fail(id, std::move(w));
  };

  if (!structurally_equal(lhs, rhs, tol)) return fail("a o (b o x) and (ab) o x differ structurally");
  for (const Point z : {Point{1.0, 0.0}, Point{0.0, 1.0}}) {
    if (!interval_equal(inner_image(lhs, z), inner_image(rhs, z), tol)) {
      return fail("functional images of a o (b o x) and (ab) o x differ", z);
    }
  }

  // Union form: every v in a o u with u in b o x lies in (ab) o x.
  constexpr std::size_t kPerSide = 8;
  std::size_t used = 0;
  const auto us = sample(bx, kPerSide, 11);
  for (std::size_t i = 0; i < us.size(); ++i) {
    for (const Point& v : sample(smul(h, a, us[i]), kPerSide, 13 + i)) {
      ++used;
      if (!contains(rhs, v, tol)) return fail("member of a o (b o x) outside (ab) o x", v);
    }
  }
  for (const Point& v : sample(rhs, kPerSide * kPerSide, 17)) {
    ++used;
    if (!contains(lhs, v, tol)) return fail("member of (ab) o x outside a o (b o x)", v);
  }
  return CheckResult::pass(id, std::nullopt, used);
}

CheckResult check_scalar_negation(const WeakHVS& h, Scalar a, Point x, Tolerance tol) {
  const std::string id = "hvs.scalar_negation";
  const HyperSet s1 = smul(h, a, -x);
  const HyperSet s2 = smul(h, -a, x);
  const HyperSet s3 = negate(smul(h, a, x));
  if (structurally_equal(s1, s2, tol) && structurally_equal(s2, s3, tol)) return CheckResult::pass(id);
  return CheckResult::fail(id, scalar_witness({{"a", a}}, {{"x", x}},
                                              "a o (-x), (-a) o x and -(a o x) are not all equal"));
}

CheckResult check_unit(const WeakHVS& h, Point x, Tolerance tol) {
  const std::string id = "hvs.unit";
  if (contains(smul(h, 1.0, x), x, tol)) return CheckResult::pass(id, x, 1);
  Witness w = scalar_witness({}, {{"x", x}}, "x not in 1 o x");
  w.point = x;
  return CheckResult::fail(id, std::move(w), 1);
}

Point essential_scalar(const WeakHVS&, Scalar a, Point x) {
  if (a == 0.0) return kZero;
  return x * a;
}

bool is_essential_scalar(const WeakHVS& h, Point e, Scalar a, Point x, Tolerance tol) {
  if (a == 0.0) throw std::invalid_argument("essential scalar point is defined by rule for a = 0");
  return contains(smul(h, a, x), e, tol) && contains(smul(h, 1.0 / a, e), x, tol);
}

}  // namespace hyper
