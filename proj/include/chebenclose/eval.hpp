#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "chebenclose/complex_interval.hpp"
#include "chebenclose/expansion.hpp"
#include "chebenclose/interval.hpp"

namespace chebenclose {

enum class Method { laurent_horner, clenshaw_interval, ica_eig, recurrence_direct };

inline constexpr std::array<Method, 4> all_methods = {
    Method::laurent_horner, Method::clenshaw_interval, Method::ica_eig,
    Method::recurrence_direct};

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::laurent_horner: return "laurent_horner";
    case Method::clenshaw_interval: return "clenshaw_interval";
    case Method::ica_eig: return "ica_eig";
    case Method::recurrence_direct: return "recurrence_direct";
  }
  return "unknown";
}

inline std::optional<Method> method_from_string(std::string_view s) {
  for (Method m : all_methods)
    if (to_string(m) == s) return m;
  return std::nullopt;
}

enum class EvalStatus { ok, degenerate, unbounded };

struct EnclosureResult {
  Method method;
  RealInterval value;
  std::int64_t elapsed_ns = 0;
  EvalStatus status = EvalStatus::ok;
};

namespace detail {

inline const RealInterval unit_domain{-1.0, 1.0};

struct StopwatchNs {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::int64_t elapsed() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

inline EnclosureResult finish(Method m, const RealInterval& value, const StopwatchNs& sw) {
  return {m, value, sw.elapsed(),
          is_finite(value) ? EvalStatus::ok : EvalStatus::unbounded};
}

}  // namespace detail

// Enclosure of z = t + i sqrt(1 - t^2) over t in x (upper branch of the
// inverse Joukowski map; |z| = 1).
inline ComplexInterval to_unit_circle(const RealInterval& x) {
  if (!intersects(x, detail::unit_domain))
    throw DomainError("evaluation point does not meet [-1, 1]");
  RealInterval xr = intersect(x, detail::unit_domain);
  RealInterval im = sqrt(1.0 - sqr(xr));
  return {xr, im};
}

// Horner's rule on sum c_k z^k; p(x) is the real part. The accumulator is a
// disc, so the per-step multiplication by z (|z| = 1) scales its radius by
// ~1 instead of wrapping a rotated box.
inline EnclosureResult eval_laurent_horner(const ChebExpansion& p, const RealInterval& x) {
  detail::StopwatchNs sw;
  ComplexDisc z = disc_from(to_unit_circle(x));
  int n = p.degree();
  ComplexDisc acc = disc_from(p.coeffs[static_cast<std::size_t>(n)]);
  for (int k = n - 1; k >= 0; --k)
    acc = disc_add(disc_mul(acc, z), disc_from(p.coeffs[static_cast<std::size_t>(k)]));
  return detail::finish(Method::laurent_horner, real_part(acc), sw);
}

// b_k = 2x b_{k+1} - b_{k+2} + c_k in interval arithmetic, p = b_0 - x b_1.
// Prone to exponential width growth at high degree; may saturate to +-inf.
inline EnclosureResult eval_clenshaw_interval(const ChebExpansion& p, const RealInterval& x) {
  detail::StopwatchNs sw;
  RealInterval b1(0.0), b2(0.0);  // b_{k+1}, b_{k+2}
  RealInterval two_x = 2.0 * x;
  for (int k = p.degree(); k >= 0; --k) {
    RealInterval b0 = two_x * b1 - b2 + p.coeffs[static_cast<std::size_t>(k)];
    b2 = b1;
    b1 = b0;
  }
  return detail::finish(Method::clenshaw_interval, b1 - x * b2, sw);
}

// Transformed iteration with D = diag(z, conj z): the two components iterate
// v = z v + (-i c_k / (2 s)) and v = conj(z) v + (+i c_k / (2 s)), and the
// value is recovered as real(i s (v1 - v2)). Degenerate when 0 is in the
// enclosure of s = sqrt(1 - x^2), i.e. at the boundary points.
inline EnclosureResult eval_ica_eig(const ChebExpansion& p, const RealInterval& x) {
  detail::StopwatchNs sw;
  if (!intersects(x, detail::unit_domain))
    throw DomainError("evaluation point does not meet [-1, 1]");
  RealInterval xr = intersect(x, detail::unit_domain);
  RealInterval s = sqrt(1.0 - sqr(xr));
  if (contains_zero(s))
    return {Method::ica_eig, RealInterval(0.0), sw.elapsed(), EvalStatus::degenerate};
  RealInterval two_s = 2.0 * s;
  ComplexDisc z = disc_from(ComplexInterval{xr, s});
  ComplexDisc zbar = disc_from(ComplexInterval{xr, -s});
  ComplexDisc v1, v2;
  const RealInterval zero(0.0);
  for (int k = p.degree(); k >= 0; --k) {
    RealInterval w = p.coeffs[static_cast<std::size_t>(k)] / two_s;
    v1 = disc_add(disc_mul(z, v1), disc_from(ComplexInterval{zero, -w}));
    v2 = disc_add(disc_mul(zbar, v2), disc_from(ComplexInterval{zero, w}));
  }
  ComplexDisc i_s = disc_from(ComplexInterval{zero, s});
  RealInterval value = real_part(disc_mul(i_s, disc_sub(v1, v2)));
  if (!is_finite(value))
    return {Method::ica_eig, value, sw.elapsed(), EvalStatus::unbounded};
  return {Method::ica_eig, value, sw.elapsed(), EvalStatus::ok};
}

// sum c_k T_k with T_{k+1} = 2x T_k - T_{k-1} in interval arithmetic.
inline EnclosureResult eval_recurrence_direct(const ChebExpansion& p, const RealInterval& x) {
  detail::StopwatchNs sw;
  int n = p.degree();
  RealInterval acc = p.coeffs[0];
  if (n >= 1) {
    RealInterval t_prev(1.0);  // T_0
    RealInterval t_cur = x;    // T_1
    acc = acc + p.coeffs[1] * t_cur;
    RealInterval two_x = 2.0 * x;
    for (int k = 2; k <= n; ++k) {
      RealInterval t_next = two_x * t_cur - t_prev;
      t_prev = t_cur;
      t_cur = t_next;
      acc = acc + p.coeffs[static_cast<std::size_t>(k)] * t_cur;
    }
  }
  return detail::finish(Method::recurrence_direct, acc, sw);
}

inline EnclosureResult evaluate(Method m, const ChebExpansion& p, const RealInterval& x) {
  switch (m) {
    case Method::laurent_horner: return eval_laurent_horner(p, x);
    case Method::clenshaw_interval: return eval_clenshaw_interval(p, x);
    case Method::ica_eig: return eval_ica_eig(p, x);
    case Method::recurrence_direct: return eval_recurrence_direct(p, x);
  }
  throw std::invalid_argument("unknown method");
}

// Plain floating-point Clenshaw on coefficient midpoints; non-validated
// reference value and timing baseline.
inline double eval_clenshaw_float(const ChebExpansion& p, double x) {
  double b1 = 0.0, b2 = 0.0;
  for (int k = p.degree(); k >= 0; --k) {
    double b0 = 2.0 * x * b1 - b2 + midpoint(p.coeffs[static_cast<std::size_t>(k)]);
    b2 = b1;
    b1 = b0;
  }
  return b1 - x * b2;
}

// kappa_2(V) for the eigenvector matrix of the Clenshaw companion form:
// sqrt((1-x)/(1+x)) on [-1,0], sqrt((1+x)/(1-x)) on [0,1]. Diverges toward
// the boundary, which is why the eigenvalue-transformed method degrades there.
inline double eigenvector_condition(double x) {
  if (!(x > -1.0 && x < 1.0))
    throw DomainError("eigenvector condition number is defined on (-1, 1)");
  return x <= 0.0 ? std::sqrt((1.0 - x) / (1.0 + x)) : std::sqrt((1.0 + x) / (1.0 - x));
}

}  // namespace chebenclose
