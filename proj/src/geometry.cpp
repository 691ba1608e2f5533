#include "hyper/geometry.hpp"

#include <algorithm>
#include <ostream>

namespace hyper {

std::ostream& operator<<(std::ostream& os, Point p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

RealInterval RealInterval::make(double lo, double hi, bool lo_open, bool hi_open) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw std::invalid_argument("interval requires finite lo <= hi");
  }
  if (lo == hi && (lo_open || hi_open)) {
    throw std::invalid_argument("degenerate interval must be closed");
  }
  return {lo, hi, lo_open, hi_open};
}

std::ostream& operator<<(std::ostream& os, const RealInterval& i) {
  return os << (i.lo_open ? '(' : '[') << i.lo << ", " << i.hi << (i.hi_open ? ')' : ']');
}

bool interval_equal(const RealInterval& a, const RealInterval& b, Tolerance tol) {
  return std::abs(a.lo - b.lo) <= tol.eps() && std::abs(a.hi - b.hi) <= tol.eps() &&
         a.lo_open == b.lo_open && a.hi_open == b.hi_open;
}

RealInterval scale_interval(Scalar a, const RealInterval& i) {
  double lo = a * i.lo;
  double hi = a * i.hi;
  bool lo_open = i.lo_open;
  bool hi_open = i.hi_open;
  if (a < 0.0) {
    std::swap(lo, hi);
    std::swap(lo_open, hi_open);
  }
  if (lo == hi) return RealInterval::point(lo == 0.0 ? 0.0 : lo);
  return {lo, hi, lo_open, hi_open};
}

bool intervals_meet(const RealInterval& a, const RealInterval& b, Tolerance tol) {
  // Larger lower end and smaller upper end; on ties an open flag wins.
  const bool lo_from_b = b.lo > a.lo || (b.lo == a.lo && b.lo_open);
  const bool hi_from_b = b.hi < a.hi || (b.hi == a.hi && b.hi_open);
  const RealInterval& lo_src = lo_from_b ? b : a;
  const RealInterval& hi_src = hi_from_b ? b : a;
  // One interval nested in the other: the inner one is nonempty.
  if (lo_from_b == hi_from_b) return true;
  if (std::abs(hi_src.hi - lo_src.lo) <= tol.eps()) return !lo_src.lo_open && !hi_src.hi_open;
  return lo_src.lo < hi_src.hi;
}

bool in_range(double v, double lo, double hi, bool lo_open, bool hi_open, double eps) {
  if (v < lo - eps || v > hi + eps) return false;
  const double d_lo = std::abs(v - lo);
  const double d_hi = std::abs(v - hi);
  const bool near_lo = d_lo <= eps;
  const bool near_hi = d_hi <= eps;
  if (near_lo && near_hi) return d_hi <= d_lo ? !hi_open : !lo_open;
  if (near_hi) return !hi_open;
  if (near_lo) return !lo_open;
  return true;
}

}  // namespace hyper
