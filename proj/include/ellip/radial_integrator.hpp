#pragma once

#include <memory>
#include <vector>

#include "ellip/grid.hpp"
#include "ellip/types.hpp"

namespace ellip {

/// Precomputed cumulative quadrature over the radial nodes.
///
/// For each weight exponent p in [0, p_max] two matrices are stored that act
/// on samples q(r_i) of a smooth profile (interpolated through all nodes):
///
///   lower(p):  row j gives  int_0^{r_j}  q(rho) (rho/r_j)^p drho
///   upper(p):  row j gives  int_{r_j}^1  q(rho) (r_j/rho)^p drho
///
/// Every power stored or applied is of a ratio <= 1, so the matrices stay
/// bounded for all p. Entries are assembled by exact Gauss-Legendre
/// integration of the Lagrange basis over inter-node gaps (with p-dependent
/// geometric subdivision where the weight is steep), then telescoped across
/// gaps. For polynomial profiles of degree <= radial node count the lower
/// integrals are exact to roundoff.
///
/// p = 0 gives the plain cumulative integrals int_0^{r_j} q and int_{r_j}^1 q.
class RadialIntegrator {
 public:
  RadialIntegrator(std::shared_ptr<const PolarGrid> grid, int p_max);

  const PolarGrid& grid() const { return *grid_; }
  int p_max() const { return p_max_; }

  /// Row-major node_count() x node_count() matrices.
  const std::vector<double>& lower(int p) const;
  const std::vector<double>& upper(int p) const;

  /// out_j = sum_i mat[j][i] q_i
  void apply(const std::vector<double>& mat, const Cx* q, Cx* out) const;

  /// int_0^1 q(rho) rho^p drho  (last row of lower(p), since r = 1 is a node)
  Cx full_integral(int p, const Cx* q) const;

 private:
  std::shared_ptr<const PolarGrid> grid_;
  int p_max_;
  std::vector<std::vector<double>> lower_;  // [p] -> matrix
  std::vector<std::vector<double>> upper_;
};

}  // namespace ellip
