#include <cmath>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "hyper/inner.hpp"
#include "hyper/rng.hpp"
#include "oracle.hpp"

using namespace hyper;

namespace {

const HyperIPSpace kSeg{WeakHVS{HypergroupModel::make(ModelKind::Segment, 0.5)}};
const HyperIPSpace kAnn{WeakHVS{HypergroupModel::make(ModelKind::Annulus, 0.5)}};

void require_all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    INFO(r.axiom_id);
    CHECK(r.passed);
  }
}

}  // namespace

TEST_CASE("inner product") {
  CHECK(ip(kSeg, {1, 0}, {1, 0}) == 1.0);
  CHECK(ip(kSeg, {0, 0}, {5, 7}) == 0.0);
  CHECK(ip(kSeg, {5, 7}, {0, 0}) == 0.0);
  CHECK(ip(kSeg, {1, 2}, {3, 4}) == 11.0);
  CHECK(ip(kSeg, {3, 4}, {1, 2}) == 11.0);
  CHECK(induced_norm(kSeg, {3, 4}) == 5.0);
}

TEST_CASE("canonical essential point") {
  CHECK(canonical_essential_sharp(kSeg, {1, 0}, {0, 1}) == Point{1, 1});
  CHECK(canonical_essential_sharp(kSeg, {2, 1}, {-2, -1}) == Point{0, 0});
  // Annulus: (1,1) is essential, but (-1,1) is too.
  const Point e = canonical_essential_sharp(kAnn, {1, 0}, {0, 1});
  CHECK(e == Point{1, 1});
  CHECK(is_essential(kAnn.group(), e, {1, 0}, {0, 1}));
  CHECK(is_essential(kAnn.group(), {-1, 1}, {1, 0}, {0, 1}));
}

TEST_CASE("axioms on the worked example") {
  const Tolerance tol{};
  require_all_pass(check_ip_axioms(kSeg, {1, 0}, {0, 1}, tol, 16, 1));
  require_all_pass(check_norm_axioms(kSeg, {1, 0}, {0, 1}, -2.5, tol));
  require_all_pass(check_norm_consequences(kSeg, {1, 0}, {0, 1}, tol));
  require_all_pass(check_ip_consequences(kSeg, 2, -3, {1, 0}, {0, 1}, tol, 16, 1));
  require_all_pass(check_schwarz_and_sup(kSeg, {1, 0}, {0, 1}, tol));
  require_all_pass(check_induced_norm(kSeg, {1, 0}, {0, 1}, 2, tol, 16, 1));
}

TEST_CASE("axiom sweep") {
  const Tolerance tol{};
  Stream rng(55);
  for (const auto& s : {kSeg, kAnn}) {
    for (int i = 0; i < 100; ++i) {
      const Point x = rng.point_in_box(10), y = rng.point_in_box(10);
      const Scalar a = rng.uniform(-10, 10), b = rng.uniform(-10, 10);
      require_all_pass(check_ip_axioms(s, x, y, tol, 16, rng.next()));
      require_all_pass(check_norm_axioms(s, x, y, a, tol));
      require_all_pass(check_norm_consequences(s, x, y, tol));
      require_all_pass(check_ip_consequences(s, a, b, x, y, tol, 16, rng.next()));
      require_all_pass(check_schwarz_and_sup(s, x, y, tol));
      require_all_pass(check_induced_norm(s, x, y, a, tol, 16, rng.next()));
    }
  }
}

TEST_CASE("sup-norm dominance against brute force") {
  // Sum dominance: sup |u| over x # y never exceeds |x| + |y|; the oracle walks
  // the set directly.
  Stream rng(9);
  for (const auto& s : {kSeg, kAnn}) {
    for (int i = 0; i < 100; ++i) {
      const Point x = rng.point_in_box(10), y = rng.point_in_box(10);
      const double sup = oracle::sup_norm(sharp(s.group(), x, y), 10000);
      CHECK(sup <= norm2(x) + norm2(y) + 1e-9);
      CHECK(sup == doctest::Approx(norm2(x + y)).epsilon(1e-12));
    }
  }
}

TEST_CASE("open hyperball") {
  CHECK(ball_contains(kSeg, {0, 0}, 1, {0.5, 0}));
  CHECK(ball_contains(kSeg, {2, 3}, 1, {2, 3}));
  CHECK_FALSE(ball_contains(kSeg, {0, 0}, 1, {1, 0}));
  CHECK_THROWS_AS(ball_contains(kSeg, {0, 0}, 0, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ball_contains(kSeg, {0, 0}, -1, {0, 0}), std::invalid_argument);
}

TEST_CASE("classical sum axiom fails on a multivalued sum") {
  const Point x{1, 0}, y{0, 1}, z{-1, -1};
  const auto v = classical_sum_axiom_witness(kSeg, x, y, 0, 1, Tolerance{}, {z});
  REQUIRE(v);
  CHECK(v->z == z);
  CHECK(std::abs(v->lhs - (-1.0)) <= 1e-9);
  CHECK(std::abs(v->rhs - (-2.0)) <= 1e-9);
  CHECK(std::abs((v->lhs - v->rhs) - 1.0) <= 1e-9);
  CHECK(v->axiom_id == "probe.classical_sum_axiom");

  // Zero sum collapses to {0}, where the axiom holds.
  CHECK_FALSE(classical_sum_axiom_witness(kSeg, x, -x, 200, 1));

  // A random search finds violations for almost every pair.
  Stream rng(21);
  int found = 0;
  for (int i = 0; i < 500; ++i) {
    if (classical_sum_axiom_witness(kSeg, rng.point_in_box(10), rng.point_in_box(10), 16, rng.next())) ++found;
  }
  CHECK(found >= 495);
}

TEST_CASE("collapse probe") {
  const Tolerance tol{};
  const auto r = collapse_probe(kSeg, {1, 0}, {0, 1}, 64, 1, tol);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness);
  CHECK(r.axiom_id == "probe.collapse");
  CHECK(collapse_probe(kSeg, {1, 0}, {-1, 0}, 64, 1, tol).passed);
  CHECK(collapse_probe(kAnn, {2, 5}, {-2, -5}, 64, 1, tol).passed);
}
