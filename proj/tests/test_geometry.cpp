#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "hyper/geometry.hpp"
#include "hyper/rng.hpp"

using namespace hyper;

TEST_CASE("dot and norm") {
  CHECK(dot({1, 0}, {0, 1}) == 0.0);
  CHECK(dot({3, 4}, {3, 4}) == 25.0);
  // Additivity checked by direct arithmetic.
  CHECK(dot({1, 0}, {-1, -1}) + dot({0, 1}, {-1, -1}) == -2.0);
  CHECK(dot({1, 1}, {-1, -1}) == -2.0);

  CHECK(norm2({3, 4}) == 5.0);
  CHECK(norm2({0, 0}) == 0.0);
  CHECK(norm2({1, 1}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(conj(-2.5) == -2.5);
}

TEST_CASE("tolerance must lie in (0,1)") {
  CHECK(Tolerance{}.eps() == 1e-9);
  CHECK_THROWS_AS(Tolerance(0.0), std::invalid_argument);
  CHECK_THROWS_AS(Tolerance(1.0), std::invalid_argument);
  CHECK_THROWS_AS(Tolerance(-1e-3), std::invalid_argument);
  CHECK_NOTHROW(Tolerance(1e-12));
}

TEST_CASE("interval construction rejects reversed bounds") {
  CHECK_THROWS_AS(RealInterval::make(1.0, 0.0, false, false), std::invalid_argument);
  CHECK_NOTHROW(RealInterval::make(0.0, 0.0, false, false));
}

TEST_CASE("interval equality") {
  const Tolerance tol{1e-9};
  const auto half_open = RealInterval::make(0, 1, false, true);
  CHECK(interval_equal(half_open, half_open, tol));
  CHECK_FALSE(interval_equal(half_open, RealInterval::make(0, 1, false, false), tol));
  CHECK(interval_equal(RealInterval::make(0, 1 + 1e-12, false, true), half_open, tol));
  CHECK_FALSE(interval_equal(RealInterval::make(0, 1 + 1e-6, false, true), half_open, tol));
}

TEST_CASE("interval scaling") {
  const auto unit = RealInterval::make(0, 1, true, false);  // (0,1]
  const Tolerance tol{};

  const auto doubled = scale_interval(2.0, unit);
  CHECK(interval_equal(doubled, RealInterval::make(0, 2, true, false), tol));

  const auto reflected = scale_interval(-1.0, unit);
  CHECK(interval_equal(reflected, RealInterval::make(-1, 0, false, true), tol));

  const auto zero = scale_interval(0.0, unit);
  CHECK(zero.lo == 0.0);
  CHECK(zero.hi == 0.0);
  CHECK_FALSE(zero.lo_open);
  CHECK_FALSE(zero.hi_open);
}

TEST_CASE("interval intersection respects openness") {
  const Tolerance tol{};
  CHECK(intervals_meet(RealInterval::make(0, 1, false, false), RealInterval::make(1, 2, false, false), tol));
  CHECK_FALSE(intervals_meet(RealInterval::make(0, 1, false, true), RealInterval::make(1, 2, false, false), tol));
  CHECK_FALSE(intervals_meet(RealInterval::make(0, 1, false, false), RealInterval::make(1, 2, true, false), tol));
  CHECK(intervals_meet(RealInterval::make(0, 3, true, true), RealInterval::make(1, 2, false, false), tol));
  CHECK_FALSE(intervals_meet(RealInterval::make(0, 1, false, false), RealInterval::make(2, 3, false, false), tol));
}

TEST_CASE("range test snaps to the nearest endpoint") {
  CHECK(in_range(1.0 + 1e-12, 0.0, 1.0, true, false, 1e-9));
  CHECK_FALSE(in_range(1.0 - 1e-12, 0.0, 1.0, true, true, 1e-9));
  CHECK_FALSE(in_range(1e-12, 0.0, 1.0, true, false, 1e-9));
  CHECK(in_range(0.5, 0.0, 1.0, true, true, 1e-9));
  CHECK_FALSE(in_range(1.5, 0.0, 1.0, false, false, 1e-9));
}

TEST_CASE("seeded streams are reproducible") {
  Stream a(derive_seed(42, 3, 7));
  Stream b(derive_seed(42, 3, 7));
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  CHECK(derive_seed(42, 3, 7) != derive_seed(42, 7, 3));
  CHECK(derive_seed(42, 0, 0) != derive_seed(43, 0, 0));

  Stream c(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}
