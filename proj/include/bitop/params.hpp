#pragma once

#include "bitop/skew4.hpp"

namespace bitop {

/// Inertia and center-of-mass data.  The inertia tensor is diag(a, a, b, b)
/// and chi is a block skew matrix supported on the (1,2) and (3,4) slots.
struct Params {
  double a = 1.0;
  double b = 2.0;
  double chi12 = 0.3;
  double chi34 = 0.1;
  /// Accept |chi12| == |chi34| (rank-drop study regime); otherwise rejected.
  bool allow_degenerate = false;

  /// Throws std::invalid_argument when the parameter set is outside the
  /// admissible region (a != b, a,b != 0, a+b != 0, chi entries nonzero,
  /// |chi12| != |chi34| unless the degenerate flag is set).
  void validate() const;

  bool is_degenerate() const;

  Skew4 chi() const {
    Skew4 x;
    x.m12 = chi12;
    x.m34 = chi34;
    return x;
  }

  /// C = (a+b) chi, the leading coefficient of the Lax matrix.
  Skew4 cmat() const { return (a + b) * chi(); }

  double inertia(int i) const { return i < 2 ? a : b; }
  double inertia_sum(int i, int j) const { return inertia(i) + inertia(j); }
};

}  // namespace bitop
