#include "ellip/classify.hpp"

#include <cmath>

#include "ellip/errors.hpp"

namespace ellip {

namespace {

constexpr double kImagTol = 1e-12;

/// Roots of a t^2 + 2b t + c with a != 0, via the reduced discriminant and a
/// sign choice that adds b and sqrt(b^2 - ac) without cancellation.
CharacteristicRoots solve_quadratic(Cx a, Cx b, Cx c) {
  CharacteristicRoots r;
  Cx s = std::sqrt(b * b - a * c);
  if ((std::conj(b) * s).real() < 0.0) s = -s;
  Cx q = -(b + s);
  if (q == Cx(0.0, 0.0)) {
    // b = 0 and b^2 = ac, so c = 0 too: double root at the origin.
    r.lambda1 = r.lambda2 = Cx(0.0, 0.0);
    return r;
  }
  r.lambda1 = q / a;  // the larger-magnitude root
  r.lambda2 = c / q;  // via the product lambda1*lambda2 = c/a
  return r;
}

}  // namespace

CharacteristicRoots characteristic_roots(const EquationCoefficients& eq) {
  const bool a_zero = eq.a == Cx(0.0, 0.0);
  const bool c_zero = eq.c == Cx(0.0, 0.0);
  if (a_zero && c_zero) throw DegenerateEquation("characteristic equation has a = c = 0");
  if (a_zero) {
    CharacteristicRoots r = solve_quadratic(eq.c, eq.b, eq.a);
    r.reversed = true;
    return r;
  }
  return solve_quadratic(eq.a, eq.b, eq.c);
}

Classification classify(const EquationCoefficients& eq) {
  Classification out;
  out.roots = characteristic_roots(eq);
  const double im1 = out.roots.lambda1.imag();
  const double im2 = out.roots.lambda2.imag();
  if (std::abs(im1) < kImagTol || std::abs(im2) < kImagTol)
    throw Inconclusive("characteristic root within 1e-12 of the real axis");
  out.elliptic = true;
  out.strongly_elliptic = im1 * im2 < 0.0;
  return out;
}

}  // namespace ellip
