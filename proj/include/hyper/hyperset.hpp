#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <variant>
#include <vector>

#include "hyper/geometry.hpp"

namespace hyper {

struct Singleton {
  Point p;
};

/// {t * target : t in (lo, hi)} with each end open or closed.
struct RaySegment {
  Point target;
  double lo = 0.0;
  double hi = 1.0;
  bool lo_open = true;
  bool hi_open = false;
};

/// {u : lo*|dir| < |u| < hi*|dir|} over all angles, each end open or closed.
struct Annulus {
  Point dir;
  double lo = 0.0;
  double hi = 1.0;
  bool lo_open = true;
  bool hi_open = false;
};

/// Sampled stand-in for sets with no closed form, such as unions over a family.
struct FiniteSet {
  std::vector<Point> points;
};

/// A nonempty subset of R^2 in one of the exact parametric forms above.
/// Constructors validate the invariants; a HyperSet never denotes the empty set.
class HyperSet {
 public:
  using Variant = std::variant<Singleton, RaySegment, Annulus, FiniteSet>;

  static HyperSet singleton(Point p);
  static HyperSet ray_segment(Point target, double lo, double hi, bool lo_open, bool hi_open);
  static HyperSet annulus(Point dir, double lo, double hi, bool lo_open, bool hi_open);
  static HyperSet finite(std::vector<Point> points);

  const Variant& value() const { return v_; }

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(v_);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(v_);
  }

 private:
  explicit HyperSet(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

std::ostream& operator<<(std::ostream& os, const HyperSet& s);

/// Membership with boundary snapping: a point within eps of a parametric
/// endpoint counts as that endpoint, whose openness then decides.
bool contains(const HyperSet& s, Point p, Tolerance tol = {});

/// Supremum of |u| over the set, attained or not.
Scalar sup_norm(const HyperSet& s);

/// n deterministic, stratified members of s. Closed endpoints are always
/// emitted first; open endpoints are approached but never emitted.
std::vector<Point> sample(const HyperSet& s, std::size_t n, std::uint64_t seed);

HyperSet negate(const HyperSet& s);

/// Image {dot(u, z) : u in s}. Exact for Singleton, RaySegment and Annulus;
/// the closed min/max hull for FiniteSet.
RealInterval inner_image(const HyperSet& s, Point z);

/// Upper end of inner_image, attained or not.
Scalar sup_inner(const HyperSet& s, Point z);

/// Same alternative, parameters within eps, same openness.
bool structurally_equal(const HyperSet& a, const HyperSet& b, Tolerance tol = {});

// Samples stay at least this far (in the plane) from open endpoints, so every
// sampled point passes contains() for any eps below it.
inline constexpr double kOpenEndpointMargin = 1e-7;

}  // namespace hyper
