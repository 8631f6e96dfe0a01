#pragma once

#include <cmath>

#include "chebenclose/interval.hpp"

namespace chebenclose {

// Axis-aligned rectangle {a + bi : a in re, b in im}.
struct ComplexInterval {
  RealInterval re;
  RealInterval im;

  friend bool operator==(const ComplexInterval& a, const ComplexInterval& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re + b.re, a.im + b.im};
}

inline ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re - b.re, a.im - b.im};
}

inline ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline ComplexInterval conj(const ComplexInterval& a) { return {a.re, -a.im}; }

namespace detail {

// Upper bound on the round-to-nearest error of the operation that produced x:
// the exact value lies within one representable step of x either way.
inline double rn_err_bound(double x) noexcept {
  double ax = std::fabs(x);
  if (std::isinf(ax)) return ax;
  return std::max(next_up(ax) - ax, ax - next_down(ax));
}

inline double add_up(double x, double y) noexcept { return next_up(x + y); }
inline double mul_up(double x, double y) noexcept { return next_up(mul_corner(x, y)); }

// Upper bound on max{|v.sup - m|, |m - v.inf|} for m inside v.
inline double dev_upper(const RealInterval& v, double m) noexcept {
  if (!std::isfinite(m) || !is_finite(v)) return std::numeric_limits<double>::infinity();
  return std::max(next_up(v.sup - m), next_up(m - v.inf));
}

// Upper bound on |re + i*im|.
inline double abs_upper(double re, double im) noexcept {
  double s = add_up(mul_up(re, re), mul_up(im, im));
  return next_up(std::sqrt(s));
}

}  // namespace detail

// Disc {c : |c - (re + i*im)| <= rad}. Multiplication by a point does not
// wrap the way axis-aligned rectangles do, which keeps long products on the
// unit circle from inflating; this is the representation the evaluation
// methods accumulate in.
struct ComplexDisc {
  double re = 0.0;
  double im = 0.0;
  double rad = 0.0;
};

inline ComplexDisc disc_from(const RealInterval& v) {
  double m = midpoint(v);
  return {m, 0.0, detail::dev_upper(v, m)};
}

inline ComplexDisc disc_from(const ComplexInterval& z) {
  double mre = midpoint(z.re);
  double mim = midpoint(z.im);
  // half-diagonal bounded by the L1 deviation
  double r = detail::add_up(detail::dev_upper(z.re, mre), detail::dev_upper(z.im, mim));
  return {mre, mim, r};
}

inline ComplexDisc disc_add(const ComplexDisc& a, const ComplexDisc& b) {
  using namespace detail;
  double cr = a.re + b.re;
  double ci = a.im + b.im;
  double cerr = add_up(rn_err_bound(cr), rn_err_bound(ci));
  return {cr, ci, add_up(add_up(a.rad, b.rad), cerr)};
}

inline ComplexDisc disc_sub(const ComplexDisc& a, const ComplexDisc& b) {
  return disc_add(a, {-b.re, -b.im, b.rad});
}

// <m1,r1> * <m2,r2> is contained in <m1*m2, |m1| r2 + |m2| r1 + r1 r2>,
// plus the rounding error of the computed center folded into the radius.
inline ComplexDisc disc_mul(const ComplexDisc& a, const ComplexDisc& b) {
  using namespace detail;
  double p1 = a.re * b.re, p2 = a.im * b.im;
  double p3 = a.re * b.im, p4 = a.im * b.re;
  double cr = p1 - p2;
  double ci = p3 + p4;
  double er = add_up(add_up(rn_err_bound(p1), rn_err_bound(p2)), rn_err_bound(cr));
  double ei = add_up(add_up(rn_err_bound(p3), rn_err_bound(p4)), rn_err_bound(ci));
  double cerr = add_up(er, ei);
  double abs_a = abs_upper(a.re, a.im);
  double abs_b = abs_upper(b.re, b.im);
  double r = add_up(add_up(mul_up(abs_a, b.rad), mul_up(abs_b, a.rad)),
                    add_up(mul_up(a.rad, b.rad), cerr));
  return {cr, ci, r};
}

inline RealInterval real_part(const ComplexDisc& d) {
  using namespace detail;
  return {next_down(lo_guard(d.re - d.rad)), next_up(hi_guard(d.re + d.rad))};
}

inline RealInterval imag_part(const ComplexDisc& d) {
  using namespace detail;
  return {next_down(lo_guard(d.im - d.rad)), next_up(hi_guard(d.im + d.rad))};
}

}  // namespace chebenclose
