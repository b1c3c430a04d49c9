#pragma once

#include "bitop/poly.hpp"
#include "bitop/skew4.hpp"

#include <vector>

namespace bitop {

/// Polynomial in the spectral parameter with complex 4x4 coefficients.
struct MatPoly {
  std::vector<CMat4> coeffs;  ///< lowest degree first

  MatPoly() = default;
  explicit MatPoly(std::vector<CMat4> c) : coeffs(std::move(c)) {}

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  CMat4 eval(cplx lambda) const {
    CMat4 acc = CMat4::Zero();
    for (int k = degree(); k >= 0; --k)
      acc = lambda * acc + coeffs[static_cast<std::size_t>(k)];
    return acc;
  }
};

}  // namespace bitop
