#include "hyper/hyperset.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "hyper/rng.hpp"

namespace hyper {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void check_fractions(Point v, double lo, double hi) {
  if (!v.finite() || v.is_zero()) {
    throw std::invalid_argument("hyperset direction must be finite and nonzero");
  }
  if (!(lo >= 0.0 && lo < hi && hi <= 1.0)) {
    throw std::invalid_argument("hyperset fractions must satisfy 0 <= lo < hi <= 1");
  }
}

// n parameter values in [lo, hi]. Closed ends come first (hi before lo), the
// rest are jittered strata of the open range kept `margin` away from open ends.
std::vector<double> parameter_samples(double lo, double hi, bool lo_open, bool hi_open,
                                      std::size_t n, Stream& rng, double margin) {
  std::vector<double> out;
  out.reserve(n);
  if (!hi_open && out.size() < n) out.push_back(hi);
  if (!lo_open && out.size() < n) out.push_back(lo);
  const std::size_t strata = n - out.size();
  if (strata == 0) return out;

  const double width = hi - lo;
  const double m = std::min(margin, width / 4.0);
  // The jitter floor keeps the top stratum within width/n of hi.
  const double u_lo = std::min(0.75, std::max(0.25, 1.0 / static_cast<double>(n)));
  for (std::size_t k = 0; k < strata; ++k) {
    const double u = rng.uniform(u_lo, 0.75);
    double t = lo + width * (static_cast<double>(k) + u) / static_cast<double>(strata);
    if (lo_open) t = std::max(t, lo + m);
    if (hi_open) t = std::min(t, hi - m);
    out.push_back(t);
  }
  return out;
}

}  // namespace

HyperSet HyperSet::singleton(Point p) {
  if (!p.finite()) throw std::invalid_argument("singleton point must be finite");
  return HyperSet(Singleton{p});
}

HyperSet HyperSet::ray_segment(Point target, double lo, double hi, bool lo_open, bool hi_open) {
  check_fractions(target, lo, hi);
  return HyperSet(RaySegment{target, lo, hi, lo_open, hi_open});
}

HyperSet HyperSet::annulus(Point dir, double lo, double hi, bool lo_open, bool hi_open) {
  check_fractions(dir, lo, hi);
  return HyperSet(Annulus{dir, lo, hi, lo_open, hi_open});
}

HyperSet HyperSet::finite(std::vector<Point> points) {
  if (points.empty()) throw std::invalid_argument("finite hyperset must be nonempty");
  for (const Point& p : points) {
    if (!p.finite()) throw std::invalid_argument("finite hyperset points must be finite");
  }
  return HyperSet(FiniteSet{std::move(points)});
}

std::ostream& operator<<(std::ostream& os, const HyperSet& s) {
  const auto bracket = [&os](double lo, double hi, bool lo_open, bool hi_open) {
    os << (lo_open ? '(' : '[') << lo << ", " << hi << (hi_open ? ')' : ']');
  };
  std::visit(overloaded{
                 [&](const Singleton& v) { os << "Singleton" << v.p; },
                 [&](const RaySegment& v) {
                   os << "RaySegment(target=" << v.target << ", t in ";
                   bracket(v.lo, v.hi, v.lo_open, v.hi_open);
                   os << ')';
                 },
                 [&](const Annulus& v) {
                   os << "Annulus(dir=" << v.dir << ", r/|dir| in ";
                   bracket(v.lo, v.hi, v.lo_open, v.hi_open);
                   os << ')';
                 },
                 [&](const FiniteSet& v) { os << "FiniteSet(" << v.points.size() << " points)"; },
             },
             s.value());
  return os;
}

bool contains(const HyperSet& s, Point p, Tolerance tol) {
  const double eps = tol.eps();
  return std::visit(
      overloaded{
          [&](const Singleton& v) { return distance(v.p, p) <= eps; },
          [&](const RaySegment& v) {
            const double len = norm2(v.target);
            const double t = dot(p, v.target) / (len * len);
            if (distance(p, v.target * t) > eps) return false;
            return in_range(t * len, v.lo * len, v.hi * len, v.lo_open, v.hi_open, eps);
          },
          [&](const Annulus& v) {
            const double len = norm2(v.dir);
            return in_range(norm2(p), v.lo * len, v.hi * len, v.lo_open, v.hi_open, eps);
          },
          [&](const FiniteSet& v) {
            return std::any_of(v.points.begin(), v.points.end(),
                               [&](Point q) { return distance(p, q) <= eps; });
          },
      },
      s.value());
}

Scalar sup_norm(const HyperSet& s) {
  return std::visit(overloaded{
                        [](const Singleton& v) { return norm2(v.p); },
                        [](const RaySegment& v) { return v.hi * norm2(v.target); },
                        [](const Annulus& v) { return v.hi * norm2(v.dir); },
                        [](const FiniteSet& v) {
                          double best = 0.0;
                          for (const Point& q : v.points) best = std::max(best, norm2(q));
                          return best;
                        },
                    },
                    s.value());
}

std::vector<Point> sample(const HyperSet& s, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample count must be at least 1");
  Stream rng(seed);
  std::vector<Point> out;
  out.reserve(n);
  std::visit(overloaded{
                 [&](const Singleton& v) { out.assign(n, v.p); },
                 [&](const RaySegment& v) {
                   const double margin = kOpenEndpointMargin / norm2(v.target);
                   for (double t : parameter_samples(v.lo, v.hi, v.lo_open, v.hi_open, n, rng, margin)) {
                     out.push_back(v.target * t);
                   }
                 },
                 [&](const Annulus& v) {
                   const double len = norm2(v.dir);
                   const Point unit = v.dir * (1.0 / len);
                   const auto radii = parameter_samples(v.lo, v.hi, v.lo_open, v.hi_open, n, rng,
                                                        kOpenEndpointMargin / len);
                   // Golden-ratio angle sequence, measured from dir so that
                   // negating dir negates every sample.
                   constexpr double kGolden = 0.6180339887498949;
                   const double offset = rng.uniform();
                   for (std::size_t k = 0; k < n; ++k) {
                     const double frac = std::fmod(offset + kGolden * static_cast<double>(k), 1.0);
                     const double theta = 2.0 * std::numbers::pi * frac;
                     const double c = std::cos(theta);
                     const double sn = std::sin(theta);
                     const Point rotated{unit.x * c - unit.y * sn, unit.x * sn + unit.y * c};
                     out.push_back(rotated * (radii[k] * len));
                   }
                 },
                 [&](const FiniteSet& v) {
                   const std::size_t start = rng.next() % v.points.size();
                   for (std::size_t k = 0; k < n; ++k) {
                     out.push_back(v.points[(start + k) % v.points.size()]);
                   }
                 },
             },
             s.value());
  return out;
}

HyperSet negate(const HyperSet& s) {
  return std::visit(overloaded{
                        [](const Singleton& v) { return HyperSet::singleton(-v.p); },
                        [](const RaySegment& v) {
                          return HyperSet::ray_segment(-v.target, v.lo, v.hi, v.lo_open, v.hi_open);
                        },
                        [](const Annulus& v) {
                          return HyperSet::annulus(-v.dir, v.lo, v.hi, v.lo_open, v.hi_open);
                        },
                        [](const FiniteSet& v) {
                          std::vector<Point> pts;
                          pts.reserve(v.points.size());
                          for (const Point& q : v.points) pts.push_back(-q);
                          return HyperSet::finite(std::move(pts));
                        },
                    },
                    s.value());
}

RealInterval inner_image(const HyperSet& s, Point z) {
  return std::visit(
      overloaded{
          [&](const Singleton& v) { return RealInterval::point(dot(v.p, z)); },
          [&](const RaySegment& v) {
            return scale_interval(dot(v.target, z), RealInterval{v.lo, v.hi, v.lo_open, v.hi_open});
          },
          [&](const Annulus& v) {
            const double reach = v.hi * norm2(v.dir) * norm2(z);
            if (reach == 0.0) return RealInterval::point(0.0);
            return RealInterval{-reach, reach, v.hi_open, v.hi_open};
          },
          [&](const FiniteSet& v) {
            double lo = dot(v.points.front(), z);
            double hi = lo;
            for (const Point& q : v.points) {
              lo = std::min(lo, dot(q, z));
              hi = std::max(hi, dot(q, z));
            }
            return RealInterval{lo, hi, false, false};
          },
      },
      s.value());
}

Scalar sup_inner(const HyperSet& s, Point z) { return inner_image(s, z).hi; }

bool structurally_equal(const HyperSet& a, const HyperSet& b, Tolerance tol) {
  const double eps = tol.eps();
  const auto close = [eps](Point p, Point q) { return distance(p, q) <= eps; };
  if (a.value().index() != b.value().index()) return false;
  return std::visit(
      overloaded{
          [&](const Singleton& v) { return close(v.p, b.as<Singleton>().p); },
          [&](const RaySegment& v) {
            const auto& w = b.as<RaySegment>();
            return close(v.target, w.target) && std::abs(v.lo - w.lo) <= eps &&
                   std::abs(v.hi - w.hi) <= eps && v.lo_open == w.lo_open && v.hi_open == w.hi_open;
          },
          [&](const Annulus& v) {
            const auto& w = b.as<Annulus>();
            // Only |dir| matters for an annulus.
            return std::abs(v.lo * norm2(v.dir) - w.lo * norm2(w.dir)) <= eps &&
                   std::abs(v.hi * norm2(v.dir) - w.hi * norm2(w.dir)) <= eps &&
                   v.lo_open == w.lo_open && v.hi_open == w.hi_open;
          },
          [&](const FiniteSet& v) {
            const auto& w = b.as<FiniteSet>();
            return v.points.size() == w.points.size() &&
                   std::equal(v.points.begin(), v.points.end(), w.points.begin(), close);
          },
      },
      a.value());
}

}  // namespace hyper
