#pragma once

#include "ellip/bipoly.hpp"
#include "ellip/types.hpp"

namespace ellip {

/// Slow direct quadrature of the three disk kernels at an interior point
/// (|z| < 1), independent of both the exact monomial rules and the per-mode
/// numerical reductions. Used only as a cross-check at a handful of points.
///
/// The integral is taken in z-centered polar coordinates with the angular
/// sum innermost; on the uniform angular grid the pv singularity of the
/// K_z kernel cancels symmetrically, so no explicit limit is needed.
/// Accuracy is ~1e-8 for smooth low-degree integrands.
Cx quad_K(const BiPolynomial& phi, Cx z);
Cx quad_Kz(const BiPolynomial& phi, Cx z);
Cx quad_Kzbar(const BiPolynomial& phi, Cx z);

}  // namespace ellip
