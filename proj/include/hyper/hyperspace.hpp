#pragma once

#include <cstddef>
#include <cstdint>

#include "hyper/check.hpp"
#include "hyper/hypergroup.hpp"

namespace hyper {

/// a o x = {t*a*x : t in (0, 1]}. The parameter set is closed under
/// multiplication, which makes scalar associativity an exact set identity.
/// Under the strict endpoint convention the outer end t = 1 is dropped too.
enum class ScalarOp { OriginSegment };

/// Weak hypervector space over R: a commutative hypergroup plus a multivalued
/// scalar product.
struct WeakHVS {
  HypergroupModel group;
  ScalarOp scalar_op = ScalarOp::OriginSegment;

  bool upper_open() const { return group.upper_open(); }
};

HyperSet smul(const WeakHVS& h, Scalar a, Point x);

/// a o A = union of a o u over u in A, in closed form for Singleton,
/// RaySegment and Annulus. Throws std::invalid_argument for a FiniteSet.
HyperSet scalar_lift(const WeakHVS& h, Scalar a, const HyperSet& set);

CheckResult check_right_distributive(const WeakHVS& h, Scalar a, Point x, Point y, Tolerance tol,
                                     std::size_t n, std::uint64_t seed);
/// Scalars are summed in the field: (a + b) o x against a o x # b o x.
CheckResult check_left_distributive(const WeakHVS& h, Scalar a, Scalar b, Point x, Tolerance tol,
                                    std::size_t n, std::uint64_t seed);
CheckResult check_scalar_assoc(const WeakHVS& h, Scalar a, Scalar b, Point x, Tolerance tol);
CheckResult check_scalar_negation(const WeakHVS& h, Scalar a, Point x, Tolerance tol);
CheckResult check_unit(const WeakHVS& h, Point x, Tolerance tol);

/// The member e of a o x with x in (1/a) o e; zero when a == 0.
Point essential_scalar(const WeakHVS& h, Scalar a, Point x);

/// Requires a != 0 (throws std::invalid_argument).
bool is_essential_scalar(const WeakHVS& h, Point e, Scalar a, Point x, Tolerance tol = {});

}  // namespace hyper
