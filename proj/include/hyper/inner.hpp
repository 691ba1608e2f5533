#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyper/check.hpp"
#include "hyper/hyperspace.hpp"

namespace hyper {

/// Hyperinner product space: a weak hypervector space with the standard dot
/// product as its form and the induced norm |x| = sqrt((x, x)).
struct HyperIPSpace {
  WeakHVS space;

  const HypergroupModel& group() const { return space.group; }
};

Scalar ip(const HyperIPSpace& s, Point x, Point y);
Scalar induced_norm(const HyperIPSpace& s, Point x);

/// x + y, the essential point of x # y that carries additivity of the form.
Point canonical_essential_sharp(const HyperIPSpace& s, Point x, Point y);

/// Axioms of a hyperinner product: positivity, definiteness, additivity
/// through an essential point, conjugate symmetry, homogeneity through the
/// essential scalar point, and dominance over x # y and 1 o x. The scalar for
/// homogeneity is drawn from `seed`.
std::vector<CheckResult> check_ip_axioms(const HyperIPSpace& s, Point x, Point y, Tolerance tol,
                                         std::size_t n, std::uint64_t seed);

/// Zero law, sup-triangle and sup-homogeneity for the induced norm.
std::vector<CheckResult> check_norm_axioms(const HyperIPSpace& s, Point x, Point y, Scalar a,
                                           Tolerance tol);

/// |-y| = |y|, sup|x # 0| = |x| and ||x| - |y|| <= sup|x # -y|.
std::vector<CheckResult> check_norm_consequences(const HyperIPSpace& s, Point x, Point y,
                                                 Tolerance tol);

/// sup|y # (-center)| < r. Throws std::invalid_argument when r <= 0.
bool ball_contains(const HyperIPSpace& s, Point center, Scalar r, Point y);

/// Consequences of the axioms: zero, negation, essential-scalar conjugation,
/// scalar dominance over a o x, and a (b o x, y) = (ab o x, y) as sets.
std::vector<CheckResult> check_ip_consequences(const HyperIPSpace& s, Scalar a, Scalar b, Point x,
                                               Point y, Tolerance tol, std::size_t n,
                                               std::uint64_t seed);

/// Cauchy-Schwarz and sup|x # y| = |e| for the canonical essential point.
std::vector<CheckResult> check_schwarz_and_sup(const HyperIPSpace& s, Point x, Point y,
                                               Tolerance tol);

/// The induced norm is a norm: per sampled u in x # y,
/// (u, u) <= (e, e) = |x|^2 + 2(x, y) + |y|^2 <= (|x| + |y|)^2.
std::vector<CheckResult> check_induced_norm(const HyperIPSpace& s, Point x, Point y, Scalar a,
                                            Tolerance tol, std::size_t n, std::uint64_t seed);

/// A z where sup (x # y, z) != (x, z) + (y, z).
struct Violation {
  Point x;
  Point y;
  Point z;
  Scalar lhs = 0.0;  // sup (x # y, z)
  Scalar rhs = 0.0;  // (x, z) + (y, z)
  std::string axiom_id = "probe.classical_sum_axiom";
};

/// Searches for a z breaking the sup-form additivity axiom, which holds only
/// when x # y is a single point. `probes` are tried before n seeded draws
/// from the box [-10, 10]^2.
std::optional<Violation> classical_sum_axiom_witness(const HyperIPSpace& s, Point x, Point y,
                                                     std::size_t n, std::uint64_t seed,
                                                     Tolerance tol = {},
                                                     const std::vector<Point>& probes = {});

/// Passes iff (u, z) = (v, z) for all sampled u, v in x # y and sampled z,
/// i.e. iff x # y looks like a single point to every functional.
CheckResult collapse_probe(const HyperIPSpace& s, Point x, Point y, std::size_t n,
                           std::uint64_t seed, Tolerance tol = {});

}  // namespace hyper
