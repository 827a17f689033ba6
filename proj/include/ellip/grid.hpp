#pragma once

#include <memory>
#include <vector>

#include "ellip/types.hpp"

namespace ellip {

/// Gauss-Legendre nodes and weights on (-1, 1).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Fourier-radial discretization of the unit disk.
///
/// Radial direction: `radial_count` Gauss-Legendre nodes mapped to (0, 1),
/// plus the boundary node r = 1 appended for trace extraction (node_count()
/// entries in all). Quadrature weights cover the interior nodes only and
/// absorb the area factor: sum_j weights[j] q(r_j) ~ int_0^1 q(rho) rho drho.
///
/// Angular direction: angular_count (M) uniform samples, M a power of two
/// chosen >= 4 * requested_band so that products of band-limited data do not
/// alias into the retained band. Retained Fourier modes span [-max_mode,
/// max_mode] with max_mode = M/2 - 1.
struct PolarGrid {
  int radial_count = 0;    ///< J, Gauss-Legendre node count
  int angular_count = 0;   ///< M, power of two
  int requested_band = 0;  ///< caller's data bandwidth
  int max_mode = 0;        ///< M/2 - 1, retained band

  std::vector<double> radii;    ///< size J+1, ascending, radii.back() == 1
  std::vector<double> weights;  ///< size J, for int_0^1 . rho drho
  std::vector<double> bary;     ///< barycentric weights over radii (normalized)
  std::vector<double> diff;     ///< (J+1)^2 spectral differentiation matrix, row-major

  int node_count() const { return radial_count + 1; }
  double theta(int m) const { return 2.0 * kPi * m / angular_count; }

  /// Barycentric interpolation weights alpha_i(r) so that
  /// q(r) ~ sum_i alpha_i q(radii[i]); exact at the nodes.
  std::vector<double> interpolation_row(double r) const;

  /// M is given explicitly (validated power of two >= max(4*band, 8)).
  static std::shared_ptr<const PolarGrid> create(int radial_count, int angular_count, int band);
  /// Picks M as the smallest admissible power of two for `band`.
  static std::shared_ptr<const PolarGrid> create_for_band(int radial_count, int band);
};

}  // namespace ellip
