#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "hyper/check.hpp"
#include "hyper/geometry.hpp"
#include "hyper/hyperset.hpp"

namespace hyper {

enum class ModelKind { Segment, Annulus };
enum class EndpointConvention { UpperClosed, StrictBoth };

std::string_view to_string(ModelKind k);
std::string_view to_string(EndpointConvention c);

/// One of the two built-in hypergroups on R^2. In both, x # y depends only on
/// s = x + y: the Segment model is the radial piece (alpha*s, s] of the ray
/// through s, the Annulus model is every point with radius in
/// (alpha*|s|, |s|]. With StrictBoth the outer end is open as well.
struct HypergroupModel {
  ModelKind kind = ModelKind::Segment;
  double alpha = 0.5;
  EndpointConvention endpoint = EndpointConvention::UpperClosed;

  static HypergroupModel make(ModelKind kind, double alpha,
                              EndpointConvention endpoint = EndpointConvention::UpperClosed);
  bool upper_open() const { return endpoint == EndpointConvention::StrictBoth; }
};

/// x # y. A zero sum gives {0}.
HyperSet sharp(const HypergroupModel& m, Point x, Point y);

/// Sampled x # A: k members of x # a for each of n sampled a in A.
HyperSet sharp_lift(const HypergroupModel& m, Point x, const HyperSet& a, std::size_t n,
                    std::uint64_t seed, std::size_t k = 16);

/// Membership of p in x # A computed in closed form for A a Singleton or the
/// output of sharp() of the same model. A FiniteSet A is scanned pointwise.
bool lifted_contains(const HypergroupModel& m, Point x, const HyperSet& a, Point p,
                     Tolerance tol = {});

CheckResult check_weak_associativity(const HypergroupModel& m, Point x, Point y, Point z,
                                     Tolerance tol, std::size_t n, std::uint64_t seed);
CheckResult check_identity_inverse(const HypergroupModel& m, Point x, Tolerance tol);
CheckResult check_retraction(const HypergroupModel& m, Point x, Point y, Tolerance tol);
CheckResult check_commutativity(const HypergroupModel& m, Point x, Point y, Tolerance tol);

/// e is essential for x # y: e in x # y and x in e # (-y). When 0 is in
/// x # y the essential point is defined to be 0.
bool is_essential(const HypergroupModel& m, Point e, Point x, Point y, Tolerance tol = {});

/// Essential points described by their defining inequalities. Membership
/// defers to is_essential; sample() draws from the inequality description.
struct EssentialRegion {
  HypergroupModel model;
  Point x;
  Point y;

  bool contains(Point e, Tolerance tol = {}) const { return is_essential(model, e, x, y, tol); }
  std::vector<Point> sample(std::size_t n, std::uint64_t seed) const;
};

struct EssentialSet {
  std::variant<std::vector<Point>, EssentialRegion> value;

  bool is_exact() const { return std::holds_alternative<std::vector<Point>>(value); }
  const std::vector<Point>& exact() const { return std::get<std::vector<Point>>(value); }
  const EssentialRegion& region() const { return std::get<EssentialRegion>(value); }
};

/// Requires the UpperClosed convention; throws std::invalid_argument otherwise.
EssentialSet essential_points(const HypergroupModel& m, Point x, Point y, Tolerance tol = {});

/// Annulus model: the essential points on the outer circle |e| = |x + y|,
/// i.e. its intersections with the circle |e - y| = |x|. Contains x + y.
std::vector<Point> annulus_outer_essentials(Point x, Point y);

}  // namespace hyper
