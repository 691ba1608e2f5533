#pragma once

// Brute-force reference computations. These only read the raw fields of a
// hyperset and walk dense parameter grids; none of the library's closed forms,
// samplers or membership code is used.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "hyper/hyperset.hpp"

namespace oracle {

using hyper::Point;

struct Extrema {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  void add(double v) {
    min = std::min(min, v);
    max = std::max(max, v);
  }
};

// n grid values over [lo, hi]. Closed ends are included; open ends are
// approached geometrically, to within 1e-8 of the span, but never reached.
inline std::vector<double> grid(double lo, double hi, bool lo_open, bool hi_open, std::size_t n) {
  std::vector<double> out;
  out.reserve(n + 16);
  const double span = hi - lo;
  if (!lo_open) out.push_back(lo);
  if (!hi_open) out.push_back(hi);
  for (int k = 2; k <= 8; ++k) {
    const double f = std::pow(10.0, -k);
    if (lo_open) out.push_back(lo + span * f);
    if (hi_open) out.push_back(hi - span * f);
  }
  const std::size_t rest = n > out.size() ? n - out.size() : 0;
  for (std::size_t i = 1; i <= rest; ++i) {
    out.push_back(lo + span * static_cast<double>(i) / static_cast<double>(rest + 1));
  }
  return out;
}

// Points of the set: about n points; annuli get 20 radii times n/20 angles,
// the angle grid starting at phase.
inline std::vector<Point> points(const hyper::HyperSet& s, std::size_t n, double phase = 0.0) {
  std::vector<Point> out;
  if (s.is<hyper::Singleton>()) {
    out.push_back(s.as<hyper::Singleton>().p);
  } else if (s.is<hyper::FiniteSet>()) {
    out = s.as<hyper::FiniteSet>().points;
  } else if (s.is<hyper::RaySegment>()) {
    const auto& r = s.as<hyper::RaySegment>();
    for (double t : grid(r.lo, r.hi, r.lo_open, r.hi_open, n)) out.push_back({t * r.target.x, t * r.target.y});
  } else {
    const auto& a = s.as<hyper::Annulus>();
    const double len = std::sqrt(a.dir.x * a.dir.x + a.dir.y * a.dir.y);
    const std::size_t radii = 20;
    const std::size_t angles = std::max<std::size_t>(2, n / radii / 2 * 2);
    for (double t : grid(a.lo, a.hi, a.lo_open, a.hi_open, radii)) {
      for (std::size_t k = 0; k < angles; ++k) {
        const double th = phase + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(angles);
        out.push_back({t * len * std::cos(th), t * len * std::sin(th)});
      }
    }
  }
  return out;
}

inline double sup_norm(const hyper::HyperSet& s, std::size_t n) {
  Extrema e;
  for (Point p : points(s, n)) e.add(std::sqrt(p.x * p.x + p.y * p.y));
  return e.max;
}

// The annulus angle grid is phased on arg(z); with an even angle count it then
// also contains the opposite direction.
inline Extrema inner_image(const hyper::HyperSet& s, Point z, std::size_t n) {
  Extrema e;
  for (Point p : points(s, n, std::atan2(z.y, z.x))) e.add(p.x * z.x + p.y * z.y);
  return e;
}

// Membership in x # y straight from the model definitions. Points within
// margin of the boundary are reported as Boundary so callers can skip them.
enum class Side { In, Out, Boundary };

inline Side classify_radius(double r, double lo, double hi, double margin) {
  if (r < lo - margin || r > hi + margin) return Side::Out;
  if (r > lo + margin && r < hi - margin) return Side::In;
  return Side::Boundary;
}

inline Side segment_sum(double alpha, Point x, Point y, Point p, double margin) {
  const Point s{x.x + y.x, x.y + y.y};
  const double ss = s.x * s.x + s.y * s.y;
  const double pn = std::hypot(p.x, p.y);
  if (ss == 0.0) return pn <= margin ? Side::In : Side::Out;
  const double t = (p.x * s.x + p.y * s.y) / ss;
  const double off = std::hypot(p.x - t * s.x, p.y - t * s.y);
  if (off > margin) return Side::Out;
  const double len = std::sqrt(ss);
  return classify_radius(t * len, alpha * len, len, margin);
}

inline Side annulus_sum(double alpha, Point x, Point y, Point p, double margin) {
  const double R = std::hypot(x.x + y.x, x.y + y.y);
  const double r = std::hypot(p.x, p.y);
  if (R == 0.0) return r <= margin ? Side::In : Side::Out;
  return classify_radius(r, alpha * R, R, margin);
}

}  // namespace oracle
