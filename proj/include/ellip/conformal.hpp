#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "ellip/field.hpp"
#include "ellip/grid.hpp"
#include "ellip/types.hpp"

namespace ellip {

/// Power-series map of the closed unit disk, omega(z) = sum_k coeffs[k] z^k.
/// A valid domain map is univalent with nonvanishing derivative; that is
/// guarded (by sampling, not proof) through univalence_check.
struct ConformalMap {
  std::vector<Cx> coeffs;  // index k multiplies z^k

  static ConformalMap identity() { return {{Cx(0.0), Cx(1.0)}}; }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Cx map(Cx z) const;
  Cx derivative(Cx z) const;
};

/// Sampled univalence diagnostics.
///   derivative_ok:   min |omega'| over a 512 x 64 polar sample (plus z=0)
///                    exceeds 1e-10
///   boundary_simple: the boundary polyline through 1024 samples of
///                    omega(e^{i theta}) has no intersection among
///                    non-adjacent segments
///   min_boundary_gap: smallest distance between non-adjacent segments
///                    (values at the sampling resolution ~2pi/1024 mean "no
///                    approach closer than the mesh"; ~0 flags a crossing)
struct UnivalenceReport {
  double min_abs_derivative = 0.0;
  double min_boundary_gap = 0.0;
  bool derivative_ok = false;
  bool boundary_simple = false;
  bool pass = false;
};

UnivalenceReport univalence_check(const ConformalMap& omega);

/// The unimodular field conj(omega')/omega' sampled on the grid and
/// analyzed into modes. Throws DerivativeVanishes if any |omega'| sample
/// falls below 1e-10.
FourierRadialField quotient_field(const ConformalMap& omega,
                                  std::shared_ptr<const PolarGrid> grid);

/// Boundary data variants.
///  - DirectModes: trig-polynomial modes of H on the unit circle.
///  - BoundarySamples: values of h at the mapped points omega(e^{i theta_m}),
///    m = 0..M-1.
///  - ExactTrace: the solution family sum_k g_k (w - tau conj(w))^k +
///    sum_m conj(h_m) conj(w)^m evaluated at w = omega(e^{i theta_m}).
struct DirectModes {
  BoundaryModes modes;
};
struct BoundarySamples {
  std::vector<Cx> values;
};
struct ExactTrace {
  std::vector<Cx> g;
  std::vector<Cx> h;
  double tau = 0.0;
};
using BoundaryDataSpec = std::variant<DirectModes, BoundarySamples, ExactTrace>;

/// Produces the boundary modes of H = h(omega(.)) on the M uniform angles.
/// Direct modes pass through unchanged but must fit the band (ModeOverflow
/// otherwise); sampled variants are analyzed by DFT and truncated to the
/// band. Throws SampleCountMismatch if sample counts differ from M.
BoundaryModes transport_boundary(const BoundaryDataSpec& spec,
                                 const ConformalMap& omega, int M, int band);

}  // namespace ellip
