#pragma once

#include <cmath>
#include <iosfwd>
#include <stdexcept>

namespace hyper {

// Elements of the scalar field. Only F = R is supported.
using Scalar = double;

struct Point {
  double x = 0.0;
  double y = 0.0;

  constexpr Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  constexpr Point operator-(Point o) const { return {x - o.x, y - o.y}; }
  constexpr Point operator-() const { return {-x, -y}; }
  constexpr Point operator*(Scalar s) const { return {s * x, s * y}; }
  constexpr bool operator==(const Point&) const = default;

  bool is_zero() const { return x == 0.0 && y == 0.0; }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr Point operator*(Scalar s, Point p) { return p * s; }

std::ostream& operator<<(std::ostream& os, Point p);

/// Absolute comparison tolerance, 0 < eps < 1.
class Tolerance {
 public:
  constexpr Tolerance() = default;
  explicit Tolerance(double eps) : eps_(eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
      throw std::invalid_argument("tolerance must satisfy 0 < eps < 1");
    }
  }
  constexpr double eps() const { return eps_; }

 private:
  double eps_ = 1e-9;
};

/// Interval of the real line with independently open or closed endpoints.
/// A degenerate interval (lo == hi) is always closed.
struct RealInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;
  bool hi_open = false;

  static RealInterval make(double lo, double hi, bool lo_open, bool hi_open);
  static RealInterval point(double v) { return {v, v, false, false}; }

  bool degenerate() const { return lo == hi; }
};

std::ostream& operator<<(std::ostream& os, const RealInterval& i);

constexpr Scalar dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
constexpr Scalar cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
// Plain sqrt rather than hypot: inputs here are far from overflow and hypot
// dominated profiles.
inline Scalar norm2(Point p) { return std::sqrt(dot(p, p)); }
inline Scalar distance(Point p, Point q) { return norm2(p - q); }

// Complex conjugation on F. The identity over R, kept explicit so the
// conjugate-symmetric identities read the same as their complex forms.
constexpr Scalar conj(Scalar a) { return a; }

bool interval_equal(const RealInterval& a, const RealInterval& b, Tolerance tol);

/// Image {a*t : t in i}. Negative a swaps the endpoints together with their
/// openness; a == 0 collapses to [0, 0].
RealInterval scale_interval(Scalar a, const RealInterval& i);

/// Whether two intervals share a point. Endpoints closer than eps are treated
/// as touching, and then meet only if both touching ends are closed.
bool intervals_meet(const RealInterval& a, const RealInterval& b, Tolerance tol);

/// Membership of v in [lo, hi] with openness flags. A value within eps of an
/// endpoint is snapped to the nearer endpoint before its flag decides.
bool in_range(double v, double lo, double hi, bool lo_open, bool hi_open, double eps);

}  // namespace hyper
