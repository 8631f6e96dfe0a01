#pragma once

#include <algorithm>
#include <cassert>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace chebenclose {

struct DivisionByZeroInterval : std::domain_error {
  DivisionByZeroInterval() : std::domain_error("interval division: denominator contains zero") {}
};

struct NegativeSqrt : std::domain_error {
  NegativeSqrt() : std::domain_error("interval sqrt: argument entirely negative") {}
};

struct EmptyIntersection : std::runtime_error {
  EmptyIntersection() : std::runtime_error("interval intersection is empty") {}
};

struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

namespace detail {

// Next representable double toward +inf / -inf. IEEE doubles of one sign are
// ordered like their bit patterns, so a single increment/decrement walks the
// whole range, subnormals included.
inline double next_up(double x) noexcept {
  if (std::isnan(x) || x == std::numeric_limits<double>::infinity()) return x;
  if (x == 0.0) return std::numeric_limits<double>::denorm_min();
  auto bits = std::bit_cast<std::uint64_t>(x);
  bits = (x > 0.0) ? bits + 1 : bits - 1;
  return std::bit_cast<double>(bits);
}

inline double next_down(double x) noexcept {
  if (std::isnan(x) || x == -std::numeric_limits<double>::infinity()) return x;
  if (x == 0.0) return -std::numeric_limits<double>::denorm_min();
  auto bits = std::bit_cast<std::uint64_t>(x);
  bits = (x > 0.0) ? bits - 1 : bits + 1;
  return std::bit_cast<double>(bits);
}

// A round-to-nearest result is within one neighbor of the exact value, so
// widening each endpoint by one step yields a guaranteed enclosure.
inline double lo_guard(double v) noexcept {   // NaN from inf - inf: no information
  return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
}
inline double hi_guard(double v) noexcept {
  return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
}

// Corner product for interval multiplication; 0 * inf corners contribute 0
// (the factor set {0} maps everything to 0).
inline double mul_corner(double a, double b) noexcept {
  double p = a * b;
  return std::isnan(p) ? 0.0 : p;
}

}  // namespace detail

// Closed interval [inf, sup] of binary64 endpoints. Endpoints may be +-inf
// (overflow saturates); NaN endpoints are excluded by construction.
struct RealInterval {
  double inf = 0.0;
  double sup = 0.0;

  RealInterval() = default;
  explicit RealInterval(double v) : inf(v), sup(v) { assert(!std::isnan(v)); }
  RealInterval(double lo, double hi) : inf(lo), sup(hi) {
    assert(!std::isnan(lo) && !std::isnan(hi) && lo <= hi);
  }

  friend bool operator==(const RealInterval& a, const RealInterval& b) {
    return a.inf == b.inf && a.sup == b.sup;
  }
};

inline RealInterval operator-(const RealInterval& a) {
  return {-a.sup, -a.inf};
}

inline RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  using namespace detail;
  return {next_down(lo_guard(a.inf + b.inf)), next_up(hi_guard(a.sup + b.sup))};
}

inline RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  using namespace detail;
  return {next_down(lo_guard(a.inf - b.sup)), next_up(hi_guard(a.sup - b.inf))};
}

// [a,b] * [c,d] = [min(ac,ad,bc,bd), max(ac,ad,bc,bd)], outward rounded
inline RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  using namespace detail;
  if ((a.inf == 0.0 && a.sup == 0.0) || (b.inf == 0.0 && b.sup == 0.0))
    return RealInterval(0.0);
  double p1 = mul_corner(a.inf, b.inf);
  double p2 = mul_corner(a.inf, b.sup);
  double p3 = mul_corner(a.sup, b.inf);
  double p4 = mul_corner(a.sup, b.sup);
  double lo = std::min(std::min(p1, p2), std::min(p3, p4));
  double hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return {next_down(lo), next_up(hi)};
}

inline RealInterval operator/(const RealInterval& a, const RealInterval& b) {
  using namespace detail;
  if (b.inf <= 0.0 && b.sup >= 0.0) throw DivisionByZeroInterval();
  // fmin/fmax skip the NaN corners (inf/inf); the remaining corners already
  // realize the extreme quotients.
  double q1 = a.inf / b.inf, q2 = a.inf / b.sup, q3 = a.sup / b.inf, q4 = a.sup / b.sup;
  double lo = std::fmin(std::fmin(q1, q2), std::fmin(q3, q4));
  double hi = std::fmax(std::fmax(q1, q2), std::fmax(q3, q4));
  return {next_down(lo_guard(lo)), next_up(hi_guard(hi))};
}

inline RealInterval operator+(const RealInterval& a, double s) { return a + RealInterval(s); }
inline RealInterval operator-(double s, const RealInterval& a) { return RealInterval(s) - a; }
inline RealInterval operator*(double s, const RealInterval& a) { return RealInterval(s) * a; }

// Enclosure of {sqrt(u) : u in a, u >= 0}. A slightly negative lower endpoint
// (rounding artifact of expressions like 1 - x^2 on |x| <= 1) is clamped to 0.
inline RealInterval sqrt(const RealInterval& a) {
  using namespace detail;
  if (a.sup < 0.0) throw NegativeSqrt();
  double lo = a.inf <= 0.0 ? 0.0 : std::max(0.0, next_down(std::sqrt(a.inf)));
  double hi = next_up(std::sqrt(a.sup));
  return {lo, hi};
}

// Enclosure of {u^2 : u in a}; tighter than a*a (no dependency).
inline RealInterval sqr(const RealInterval& a) {
  using namespace detail;
  double m = std::max(std::fabs(a.inf), std::fabs(a.sup));
  if (m == 0.0) return RealInterval(0.0);
  if (a.inf <= 0.0 && a.sup >= 0.0) return {0.0, next_up(mul_corner(m, m))};
  double s = std::min(std::fabs(a.inf), std::fabs(a.sup));
  return {std::max(0.0, next_down(s * s)), next_up(mul_corner(m, m))};
}

inline bool contains(const RealInterval& a, double v) {
  return a.inf <= v && v <= a.sup;
}

inline bool contains_zero(const RealInterval& a) { return contains(a, 0.0); }

inline bool is_finite(const RealInterval& a) {
  return std::isfinite(a.inf) && std::isfinite(a.sup);
}

inline bool subset(const RealInterval& a, const RealInterval& b) {
  return b.inf <= a.inf && a.sup <= b.sup;
}

inline bool intersects(const RealInterval& a, const RealInterval& b) {
  return std::max(a.inf, b.inf) <= std::min(a.sup, b.sup);
}

inline RealInterval intersect(const RealInterval& a, const RealInterval& b) {
  double lo = std::max(a.inf, b.inf);
  double hi = std::min(a.sup, b.sup);
  if (lo > hi) throw EmptyIntersection();
  return {lo, hi};
}

inline RealInterval hull(const RealInterval& a, const RealInterval& b) {
  return {std::min(a.inf, b.inf), std::max(a.sup, b.sup)};
}

// Half-width (sup - inf)/2, rounded upward. The subtraction's exactness is
// decided by its TwoSum residual so that exact widths stay exact.
inline double radius(const RealInterval& a) {
  double d = a.sup - a.inf;
  if (std::isinf(d)) return d;
  double b = -a.inf;
  double bb = d - a.sup;
  double err = (a.sup - (d - bb)) + (b - bb);
  if (err > 0.0) d = detail::next_up(d);
  double r = 0.5 * d;
  if (r + r != d) r = detail::next_up(r);  // halving is inexact only for odd subnormals
  return r;
}

inline double midpoint(const RealInterval& a) {
  double m = 0.5 * (a.inf + a.sup);
  if (std::isfinite(m)) return m;
  if (a.inf == -a.sup) return 0.0;  // covers [-inf, +inf]
  m = 0.5 * a.inf + 0.5 * a.sup;
  if (std::isfinite(m)) return m;
  return a.inf == -std::numeric_limits<double>::infinity()
             ? -std::numeric_limits<double>::max()
             : std::numeric_limits<double>::max();
}

// String to enclosing interval. Hexadecimal-float literals ("0x1.8p-1") parse
// bit-exactly and stay thin; decimal literals are widened outward by one step
// on each side since round-to-nearest parsing may land on either neighbor.
inline RealInterval interval_from_string(const std::string& s) {
  const char* c = s.c_str();
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(c, &end);
  bool overflowed = errno == ERANGE;
  if (end == c || *end != '\0' || std::isnan(v))
    throw std::invalid_argument("not a finite numeric literal: '" + s + "'");
  if (s.find('x') != std::string::npos || s.find('X') != std::string::npos)
    return RealInterval(v);
  if (v == 0.0 && !overflowed) return RealInterval(0.0);
  return {detail::next_down(v), detail::next_up(v)};
}

inline std::ostream& operator<<(std::ostream& os, const RealInterval& a) {
  return os << "[" << a.inf << ", " << a.sup << "]";
}

}  // namespace chebenclose
