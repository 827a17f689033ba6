#include "ellip/kernel_quadrature.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "ellip/grid.hpp"

namespace ellip {
namespace {

constexpr int kAngles = 512;
constexpr int kRadialQ = 48;

/// int_D f(zeta) dmu(zeta) for f smooth away from a possible pv-type
/// singularity at z. The disk is split into B(z, d) with d = 0.9 dist(z, T)
/// (handled angle-first, which cancels the singular moments exactly on the
/// uniform grid) and the star-shaped remainder, integrated ray by ray out
/// to the circle.
Cx disk_integral(Cx z, const std::function<Cx(Cx)>& f) {
  const double R = std::abs(z);
  const double d = 0.9 * (1.0 - R);
  std::vector<double> gx, gw;
  gauss_legendre(kRadialQ, gx, gw);

  Cx total = 0.0;
  for (int qi = 0; qi < kRadialQ; ++qi) {
    const double s = 0.5 * d * (gx[qi] + 1.0);
    const double ws = 0.5 * d * gw[qi] * s;
    Cx asum = 0.0;
    for (int k = 0; k < kAngles; ++k)
      asum += f(z + std::polar(s, 2.0 * kPi * k / kAngles));
    total += ws * asum * (2.0 * kPi / kAngles);
  }

  for (int k = 0; k < kAngles; ++k) {
    const double alpha = 2.0 * kPi * k / kAngles;
    const double c = (std::conj(z) * std::polar(1.0, alpha)).real();
    const double smax = -c + std::sqrt(c * c + 1.0 - R * R);
    Cx ssum = 0.0;
    for (int qi = 0; qi < kRadialQ; ++qi) {
      const double s = d + 0.5 * (smax - d) * (gx[qi] + 1.0);
      ssum += 0.5 * (smax - d) * gw[qi] * s *
              f(z + std::polar(s, alpha));
    }
    total += ssum * (2.0 * kPi / kAngles);
  }
  return total;
}

}  // namespace

Cx quad_K(const BiPolynomial& phi, Cx z) {
  const Cx zb = std::conj(z);
  return disk_integral(z, [&](Cx zeta) {
           return phi.eval(zeta) *
                  (1.0 / (zeta - z) + zb / (1.0 - zeta * zb));
         }) /
         kPi;
}

Cx quad_Kz(const BiPolynomial& phi, Cx z) {
  return disk_integral(z, [&](Cx zeta) {
           const Cx dd = zeta - z;
           return phi.eval(zeta) / (dd * dd);
         }) /
         kPi;
}

Cx quad_Kzbar(const BiPolynomial& phi, Cx z) {
  const Cx zb = std::conj(z);
  return disk_integral(z, [&](Cx zeta) {
           const Cx dd = 1.0 - zeta * zb;
           return phi.eval(zeta) / (dd * dd);
         }) /
         kPi;
}

}  // namespace ellip
