#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "chebenclose/interval.hpp"

namespace chebenclose {

// p(x) = sum_{k=0}^{n} c_k T_k(x) with interval coefficients c_0..c_n.
struct ChebExpansion {
  std::vector<RealInterval> coeffs;

  explicit ChebExpansion(std::vector<RealInterval> c) : coeffs(std::move(c)) {
    if (coeffs.empty())
      throw std::invalid_argument("Chebyshev expansion needs at least the constant coefficient");
    for (const auto& ci : coeffs)
      if (!is_finite(ci))
        throw std::invalid_argument("Chebyshev coefficients must be finite intervals");
  }

  static ChebExpansion from_midpoints(const std::vector<double>& mids) {
    std::vector<RealInterval> c;
    c.reserve(mids.size());
    for (double m : mids) c.emplace_back(m);
    return ChebExpansion(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

}  // namespace chebenclose
