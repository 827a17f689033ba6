#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <vector>

#include "ellip/bipoly.hpp"
#include "ellip/grid.hpp"
#include "ellip/types.hpp"

namespace ellip {

/// Boundary data on the unit circle: mode k -> coefficient of e^{ik theta}.
struct BoundaryModes {
  std::map<int, Cx> modes;
};

/// Function on the disk stored as angular Fourier modes k in [-max_mode,
/// max_mode], each with a radial profile sampled at the grid nodes (the
/// boundary node r = 1 included). Modes beyond the band are identically zero
/// by construction.
class FourierRadialField {
 public:
  explicit FourierRadialField(std::shared_ptr<const PolarGrid> grid);

  const PolarGrid& grid() const { return *grid_; }
  const std::shared_ptr<const PolarGrid>& grid_ptr() const { return grid_; }
  int band() const { return grid_->max_mode; }

  Cx* profile(int k);
  const Cx* profile(int k) const;
  Cx& at(int k, int j) { return profile(k)[j]; }
  Cx at(int k, int j) const { return profile(k)[j]; }

  FourierRadialField& operator+=(const FourierRadialField& o);
  FourierRadialField& operator*=(Cx s);
  /// this += s * o
  void axpy(Cx s, const FourierRadialField& o);

  const std::vector<Cx>& raw() const { return data_; }
  std::vector<Cx>& raw() { return data_; }

 private:
  std::shared_ptr<const PolarGrid> grid_;
  std::vector<Cx> data_;  // (2*max_mode+1) rows of node_count() values
};

/// Exact sampling of a bi-polynomial: monomial (a, b) lands in mode a-b with
/// radial profile r^{a+b}. Throws ModeOverflow if |a-b| exceeds the band.
FourierRadialField from_bipoly(const BiPolynomial& p, std::shared_ptr<const PolarGrid> grid);

/// Point samples f(r_j, theta_m), laid out as samples[j * M + m].
std::vector<Cx> synthesize_samples(const FourierRadialField& f);

/// Inverse of synthesize_samples via per-radius FFT; the Nyquist bin is
/// dropped. Throws DimensionMismatch on wrong input size.
FourierRadialField analyze(std::shared_ptr<const PolarGrid> grid, const std::vector<Cx>& samples);

/// Evaluation anywhere on the closed disk: barycentric radial interpolation
/// of each mode profile, then the angular mode sum.
Cx synthesize_at(const FourierRadialField& f, double r, double theta);
Cx synthesize_point(const FourierRadialField& f, Cx z);

/// Pointwise product computed in sample space (with the grid's dealiasing
/// margin); grids must match.
FourierRadialField multiply(const FourierRadialField& a, const FourierRadialField& b);

/// Sampled sup norm over all grid points, boundary row included.
double norm_sup(const FourierRadialField& f);

/// L^p(D) norm via the radial quadrature weights and uniform angular weights.
double norm_lp(const FourierRadialField& f, double p);

/// L^2 norm computed in mode space (Parseval route); used for cross-checks.
double norm_l2_modes(const FourierRadialField& f);

/// Spectral Wirtinger derivatives. Mode k with profile phi contributes
///   dz:    mode k-1, (phi' + k phi / r) / 2
///   dzbar: mode k+1, (phi' - k phi / r) / 2
/// with phi' from the grid differentiation matrix. Output modes that fall
/// outside the band are dropped.
FourierRadialField dz_field(const FourierRadialField& f);
FourierRadialField dzbar_field(const FourierRadialField& f);

/// Trace at r = 1 as boundary modes.
BoundaryModes boundary_trace_modes(const FourierRadialField& f);

/// CSV rows "r,theta,re,im" over all grid samples.
void write_csv(const FourierRadialField& f, std::ostream& os);

}  // namespace ellip
