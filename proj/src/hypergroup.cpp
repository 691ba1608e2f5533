#include "hyper/hypergroup.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "hyper/rng.hpp"

namespace hyper {
namespace {

// Values j along a line with x + a = j*d for p = pi*d in x # a, i.e. the j
// whose radial piece (alpha*j, j] covers pi.
RealInterval covering_positions(const HypergroupModel& m, double pi) {
  if (pi > 0.0) return {pi, pi / m.alpha, m.upper_open(), true};
  return {pi / m.alpha, pi, true, m.upper_open()};
}

// Segment model, A = {t*S : t in T}. Unique (s, t) solve when x and S span
// the plane, otherwise a one-dimensional interval question along the line.
bool segment_lifted(const HypergroupModel& m, Point x, const RaySegment& a, Point p, Tolerance tol) {
  const double eps = tol.eps();
  const double len = norm2(a.target);
  if (norm2(p) <= eps) {
    // Only a vanishing sum x + a puts the origin (within eps) in x # a.
    const double t_star = std::clamp(-dot(x, a.target) / (len * len), a.lo, a.hi);
    return norm2(x + a.target * t_star) <= eps / m.alpha;
  }

  const double c = cross(x, a.target);
  if (std::abs(c) > 1e-12 * std::max(1.0, norm2(x) * len)) {
    const double s = cross(p, a.target) / c;
    const double q = cross(x, p) / c;
    if (s <= 0.0) return false;
    const double t = q / s;
    if (!in_range(t * len, a.lo * len, a.hi * len, a.lo_open, a.hi_open, eps)) return false;
    return contains(sharp(m, x, a.target * std::clamp(t, a.lo, a.hi)), p, tol);
  }

  const Point d = a.target * (1.0 / len);
  if (std::abs(cross(p, d)) > eps) return false;
  const double xi = dot(x, d);
  const RealInterval sums{xi + a.lo * len, xi + a.hi * len, a.lo_open, a.hi_open};
  return intervals_meet(sums, covering_positions(m, dot(p, d)), tol);
}

// Range of |x + a| over a in A, with attainment of each end.
RealInterval distance_range(Point x, const HyperSet& a) {
  if (a.is<Annulus>()) {
    const auto& v = a.as<Annulus>();
    const double len = norm2(v.dir);
    const double r_lo = v.lo * len;
    const double r_hi = v.hi * len;
    const double xi = norm2(x);
    RealInterval out{0.0, xi + r_hi, false, v.hi_open};
    if (xi < r_lo) {
      out.lo = r_lo - xi;
      out.lo_open = v.lo_open;
    } else if (xi > r_hi) {
      out.lo = xi - r_hi;
      out.lo_open = v.hi_open;
    } else {
      out.lo_open = (xi == r_lo && v.lo_open) || (xi == r_hi && v.hi_open);
    }
    return out;
  }
  const auto& v = a.as<RaySegment>();
  const double len2 = dot(v.target, v.target);
  const auto f = [&](double t) { return norm2(x + v.target * t); };
  const double t_min = std::clamp(-dot(x, v.target) / len2, v.lo, v.hi);
  RealInterval out{f(t_min), 0.0, false, false};
  out.lo_open = (t_min == v.lo && v.lo_open) || (t_min == v.hi && v.hi_open);
  const double f_lo = f(v.lo);
  const double f_hi = f(v.hi);
  out.hi = std::max(f_lo, f_hi);
  if (f_lo == f_hi) {
    out.hi_open = v.lo_open && v.hi_open;
  } else {
    out.hi_open = f_hi > f_lo ? v.hi_open : v.lo_open;
  }
  return out;
}

// Annulus model: p is in x # a iff |x + a| lies in [|p|, |p|/alpha).
bool annulus_lifted(const HypergroupModel& m, Point x, const HyperSet& a, Point p, Tolerance tol) {
  const RealInterval reach = distance_range(x, a);
  const double rho = norm2(p);
  if (rho <= tol.eps()) return reach.lo <= tol.eps() / m.alpha;
  return intervals_meet(reach, {rho, rho / m.alpha, m.upper_open(), true}, tol);
}

Witness triple_witness(Point x, Point y, Point z) {
  Witness w;
  w.inputs = {{"x", x}, {"y", y}, {"z", z}};
  return w;
}

}  // namespace

std::string_view to_string(ModelKind k) { return k == ModelKind::Segment ? "segment" : "annulus"; }

std::string_view to_string(EndpointConvention c) {
  return c == EndpointConvention::UpperClosed ? "upper-closed" : "strict";
}

HypergroupModel HypergroupModel::make(ModelKind kind, double alpha, EndpointConvention endpoint) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must satisfy 0 < alpha < 1");
  }
  return {kind, alpha, endpoint};
}

HyperSet sharp(const HypergroupModel& m, Point x, Point y) {
  const Point s = x + y;
  if (s.is_zero()) return HyperSet::singleton({0.0, 0.0});
  if (m.kind == ModelKind::Segment) return HyperSet::ray_segment(s, m.alpha, 1.0, true, m.upper_open());
  return HyperSet::annulus(s, m.alpha, 1.0, true, m.upper_open());
}

HyperSet sharp_lift(const HypergroupModel& m, Point x, const HyperSet& a, std::size_t n,
                    std::uint64_t seed, std::size_t k) {
  if (n == 0 || k == 0) throw std::invalid_argument("sharp_lift needs n >= 1 and k >= 1");
  const auto anchors = sample(a, n, derive_seed(seed, 0));
  std::vector<Point> pts;
  pts.reserve(n * k);
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    const auto part = sample(sharp(m, x, anchors[i]), k, derive_seed(seed, 1, i));
    pts.insert(pts.end(), part.begin(), part.end());
  }
  return HyperSet::finite(std::move(pts));
}

bool lifted_contains(const HypergroupModel& m, Point x, const HyperSet& a, Point p, Tolerance tol) {
  if (a.is<Singleton>()) return contains(sharp(m, x, a.as<Singleton>().p), p, tol);
  if (a.is<FiniteSet>()) {
    const auto& pts = a.as<FiniteSet>().points;
    return std::any_of(pts.begin(), pts.end(),
                       [&](Point q) { return contains(sharp(m, x, q), p, tol); });
  }
  if (m.kind == ModelKind::Annulus) return annulus_lifted(m, x, a, p, tol);
  if (a.is<RaySegment>()) return segment_lifted(m, x, a.as<RaySegment>(), p, tol);
  // Segment model over an annulus of anchors has no closed form here.
  const auto anchors = sample(a, 4096, 0);
  return std::any_of(anchors.begin(), anchors.end(),
                     [&](Point q) { return contains(sharp(m, x, q), p, tol); });
}

CheckResult check_weak_associativity(const HypergroupModel& m, Point x, Point y, Point z,
                                     Tolerance tol, std::size_t n, std::uint64_t seed) {
  const std::string id = "hypergroup.weak_associativity";
  const HyperSet xy = sharp(m, x, y);
  const HyperSet yz = sharp(m, y, z);
  const Point u = x + y;
  const Point v = y + z;
  const Point w = u + z;

  // Both sides reach x + y + z through the outer ends of every step.
  if (contains(xy, u, tol) && contains(sharp(m, u, z), w, tol) && contains(yz, v, tol) &&
      contains(sharp(m, x, v), w, tol)) {
    return CheckResult::pass(id, w, 1);
  }
  if (lifted_contains(m, z, xy, w, tol) && lifted_contains(m, x, yz, w, tol)) {
    return CheckResult::pass(id, w, 1);
  }

  std::size_t used = 1;
  const HyperSet left = sharp_lift(m, z, xy, n, derive_seed(seed, 1));
  for (const Point& p : left.as<FiniteSet>().points) {
    ++used;
    if (lifted_contains(m, x, yz, p, tol)) return CheckResult::pass(id, p, used);
  }
  const HyperSet right = sharp_lift(m, x, yz, n, derive_seed(seed, 2));
  for (const Point& p : right.as<FiniteSet>().points) {
    ++used;
    if (lifted_contains(m, z, xy, p, tol)) return CheckResult::pass(id, p, used);
  }
  Witness wit = triple_witness(x, y, z);
  wit.point = w;
  wit.note = "no common point of (x#y)#z and x#(y#z) found";
  return CheckResult::fail(id, std::move(wit), used);
}

CheckResult check_identity_inverse(const HypergroupModel& m, Point x, Tolerance tol) {
  const std::string id = "hypergroup.identity_inverse";
  const Point zero{0.0, 0.0};
  const auto fail = [&](Point y, std::string note) {
    Witness w;
    w.inputs = {{"x", x}, {"y", y}};
    w.point = zero;
    w.note = std::move(note);
    return CheckResult::fail(id, std::move(w));
  };
  if (!contains(sharp(m, x, -x), zero, tol)) return fail(-x, "0 not in x#(-x)");
  if (!contains(sharp(m, -x, x), zero, tol)) return fail(-x, "0 not in (-x)#x");

  // The inverse is unique: no other y on a grid reaches 0.
  std::size_t used = 2;
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j <= 8; ++j) {
      const Point y{-10.0 + 2.5 * i, -10.0 + 2.5 * j};
      if ((x + y).is_zero()) continue;
      ++used;
      if (contains(sharp(m, x, y), zero, tol) || contains(sharp(m, y, x), zero, tol)) {
        return fail(y, "0 in x#y for y != -x");
      }
    }
  }
  return CheckResult::pass(id, zero, used);
}

CheckResult check_retraction(const HypergroupModel& m, Point x, Point y, Tolerance tol) {
  const std::string id = "hypergroup.retraction";
  const auto fail = [&](std::string note) {
    Witness w;
    w.inputs = {{"x", x}, {"y", y}};
    w.point = x;
    w.note = std::move(note);
    return CheckResult::fail(id, std::move(w), 3);
  };
  if (!contains(sharp(m, x, {0.0, 0.0}), x, tol)) return fail("x not in x#0");

  const HyperSet xy = sharp(m, x, y);
  const Point u = x + y;
  if (contains(xy, u, tol) && contains(sharp(m, u, -y), x, tol)) return CheckResult::pass(id, u, 3);
  if (lifted_contains(m, -y, xy, x, tol)) return CheckResult::pass(id, std::nullopt, 3);
  if (contains(xy, {0.0, 0.0}, tol)) return fail("degenerate branch: x#y = {0} and x not in 0#(-y)");
  return fail("no u in x#y with x in u#(-y)");
}

CheckResult check_commutativity(const HypergroupModel& m, Point x, Point y, Tolerance tol) {
  const std::string id = "hypergroup.commutativity";
  if (structurally_equal(sharp(m, x, y), sharp(m, y, x), tol)) return CheckResult::pass(id);
  Witness w;
  w.inputs = {{"x", x}, {"y", y}};
  w.note = "x#y differs from y#x";
  return CheckResult::fail(id, std::move(w));
}

bool is_essential(const HypergroupModel& m, Point e, Point x, Point y, Tolerance tol) {
  const HyperSet xy = sharp(m, x, y);
  if (contains(xy, {0.0, 0.0}, tol)) return norm2(e) <= tol.eps();
  return contains(xy, e, tol) && contains(sharp(m, e, -y), x, tol);
}

std::vector<Point> annulus_outer_essentials(Point x, Point y) {
  const Point s = x + y;
  const double big_r = norm2(s);
  const double small_r = norm2(x);
  const double d = norm2(y);
  if (d == 0.0) return {s};
  // Circle |e| = big_r against circle |e - y| = small_r.
  const double along = (big_r * big_r - small_r * small_r + d * d) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, big_r * big_r - along * along));
  const Point base = y * (along / d);
  const Point perp = Point{-y.y, y.x} * (h / d);
  const Point a = base + perp;
  const Point b = base - perp;
  const Point other = distance(a, s) > distance(b, s) ? a : b;
  if (distance(other, s) <= 1e-12 * std::max(1.0, big_r)) return {s};
  return {s, other};
}

std::vector<Point> EssentialRegion::sample(std::size_t n, std::uint64_t seed) const {
  std::vector<Point> out;
  if (n == 0) return out;
  const Point s = x + y;
  const double xn = norm2(x);
  const double alpha = model.alpha;
  const double scale = 1e-12 * std::max({1.0, norm2(s), xn, norm2(y)});

  // Defining inequalities of the region, evaluated without set machinery.
  std::function<bool(Point)> admissible;
  std::vector<Point> seeds;
  if (model.kind == ModelKind::Annulus) {
    admissible = [&](Point e) {
      const double r = norm2(e);
      const double g = norm2(e - y);
      if (!(alpha * norm2(s) < r && r <= norm2(s) + scale)) return false;
      // x = 0 needs e # (-y) = {0}, i.e. e = y.
      if (xn <= scale) return g <= scale;
      return alpha * g < xn && xn <= g + scale;
    };
    seeds = annulus_outer_essentials(x, y);
  } else {
    // Collinear case along d: e = t*s, need x/(e - y) in (alpha, 1].
    admissible = [&](Point e) {
      const Point g = e - y;
      if (norm2(g) <= scale) return xn <= scale;
      if (dot(g, x) <= 0.0 && xn > scale) return false;
      const double gn = norm2(g);
      return alpha * gn < xn && xn <= gn + scale;
    };
    seeds = {s};
  }
  for (const Point& e : seeds) {
    if (out.size() < n && admissible(e)) out.push_back(e);
  }

  if (model.kind == ModelKind::Segment) {
    // With x = g s and y = (1 - g) s the region is t s for t in (max(alpha,
    // 1 - g + g / alpha), 1] when g < 0, and just s otherwise.
    const double g = dot(x, s) / dot(s, s);
    const double lower = std::max(alpha, 1.0 - g + g / alpha);
    if (g < 0.0 && xn > scale && lower < 1.0) {
      for (const Point& e : hyper::sample(HyperSet::ray_segment(s, lower, 1.0, true, false), n, seed)) {
        if (out.size() >= n) break;
        if (admissible(e) && !(e == s)) out.push_back(e);
      }
    }
    return out;
  }
  // x = 0 leaves only e = y, already among the seeds.
  if (xn <= scale) return out;

  const HyperSet sum_set = sharp(model, x, y);
  // Also draw around y, where |e - y| is pinned to [|x|, |x|/alpha).
  const HyperSet ring = HyperSet::annulus({xn / alpha, 0.0}, alpha, 1.0, false, true);
  for (std::uint64_t batch = 0; out.size() < n && batch < 64; ++batch) {
    auto cand = hyper::sample(sum_set, 4 * n, derive_seed(seed, batch, 0));
    for (const Point& w : hyper::sample(ring, 4 * n, derive_seed(seed, batch, 1))) cand.push_back(y + w);
    for (const Point& e : cand) {
      if (out.size() >= n) break;
      if (admissible(e)) out.push_back(e);
    }
  }
  return out;
}

EssentialSet essential_points(const HypergroupModel& m, Point x, Point y, Tolerance tol) {
  if (m.endpoint != EndpointConvention::UpperClosed) {
    throw std::invalid_argument("essential points require the upper-closed convention");
  }
  const Point s = x + y;
  if (s.is_zero()) return {std::vector<Point>{{0.0, 0.0}}};
  if (m.kind == ModelKind::Segment &&
      std::abs(cross(x, y)) > tol.eps() * std::max(1.0, norm2(x) * norm2(y))) {
    return {std::vector<Point>{s}};
  }
  return {EssentialRegion{m, x, y}};
}

}  // namespace hyper
