#pragma once

#include "ellip/types.hpp"

namespace ellip {

/// Second-order equation a f_xx + 2b f_xy + c f_yy = 0 with complex coefficients.
struct EquationCoefficients {
  Cx a, b, c;
};

/// Roots of the characteristic polynomial a t^2 + 2b t + c. When a = 0 and
/// c != 0 the reversed-role polynomial c t^2 + 2b t + a is solved instead and
/// `reversed` is set (one original root escapes to infinity).
struct CharacteristicRoots {
  Cx lambda1, lambda2;
  bool reversed = false;
};

struct Classification {
  CharacteristicRoots roots;
  bool elliptic = false;           ///< both roots strictly non-real
  bool strongly_elliptic = false;  ///< roots on opposite sides of the real axis
};

/// Throws DegenerateEquation when a = c = 0.
CharacteristicRoots characteristic_roots(const EquationCoefficients& eq);

/// Throws Inconclusive when some |Im lambda| < 1e-12 (the sign of the
/// imaginary part cannot be certified), DegenerateEquation when a = c = 0.
Classification classify(const EquationCoefficients& eq);

}  // namespace ellip
