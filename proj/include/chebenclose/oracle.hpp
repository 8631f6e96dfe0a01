#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chebenclose/interval.hpp"

namespace chebenclose {

struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exact conversion: every finite double is m * 2^e with |m| < 2^53.
inline Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("rational_from_double needs a finite value");
  int e = 0;
  double m = std::frexp(v, &e);  // v = m * 2^e, |m| in [0.5, 1) or 0
  auto num = BigInt(static_cast<long long>(m * 9007199254740992.0));  // m * 2^53, exact
  int shift = e - 53;
  if (shift >= 0) return Rational(num << shift);
  return Rational(num, BigInt(1) << -shift);
}

struct RationalExpansion {
  std::vector<Rational> coeffs;

  explicit RationalExpansion(std::vector<Rational> c) : coeffs(std::move(c)) {
    if (coeffs.empty())
      throw std::invalid_argument("expansion needs at least the constant coefficient");
  }

  static RationalExpansion from_doubles(const std::vector<double>& mids) {
    std::vector<Rational> c;
    c.reserve(mids.size());
    for (double m : mids) c.push_back(rational_from_double(m));
    return RationalExpansion(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

inline constexpr int kDefaultOracleDegreeCap = 256;

// Clenshaw in exact rational arithmetic: b_k = 2x b_{k+1} - b_{k+2} + c_k,
// value b_0 - x b_1. Rational bit length grows roughly linearly with degree
// per step (quadratic work overall), hence the degree cap.
inline Rational exact_clenshaw(const RationalExpansion& p, const Rational& x,
                               int degree_cap = kDefaultOracleDegreeCap) {
  if (p.degree() > degree_cap)
    throw ResourceLimit("exact oracle degree cap exceeded: " + std::to_string(p.degree()) +
                        " > " + std::to_string(degree_cap));
  Rational b1 = 0, b2 = 0;
  Rational two_x = 2 * x;
  for (int k = p.degree(); k >= 0; --k) {
    Rational b0 = two_x * b1 - b2 + p.coeffs[static_cast<std::size_t>(k)];
    b2 = b1;
    b1 = std::move(b0);
  }
  return b1 - x * b2;
}

// Exact membership test of a rational in a binary64-endpoint interval.
inline bool contains_exact(const RealInterval& enc, const Rational& v) {
  bool lo_ok = enc.inf == -std::numeric_limits<double>::infinity() ||
               (std::isfinite(enc.inf) && rational_from_double(enc.inf) <= v);
  bool hi_ok = enc.sup == std::numeric_limits<double>::infinity() ||
               (std::isfinite(enc.sup) && v <= rational_from_double(enc.sup));
  return lo_ok && hi_ok;
}

inline bool verify_enclosure(const RationalExpansion& p, const Rational& x,
                             const RealInterval& enc,
                             int degree_cap = kDefaultOracleDegreeCap) {
  return contains_exact(enc, exact_clenshaw(p, x, degree_cap));
}

}  // namespace chebenclose
