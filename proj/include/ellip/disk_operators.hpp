#pragma once

#include <cstdint>
#include <memory>

#include "ellip/field.hpp"
#include "ellip/grid.hpp"
#include "ellip/radial_integrator.hpp"

namespace ellip {

/// The disk-problem building blocks, each diagonal in the angular modes:
///
///   apply_P      harmonic extension of boundary modes (Poisson integral)
///   apply_K      solution operator of d/dz d/dzbar u = -d/dz phi with
///                zero boundary trace
///   apply_Kz     d/dz of apply_K (principal-value kernel plus local term)
///   apply_Kzbar  d/dzbar of apply_K plus the identity, i.e.
///                d/dzbar (apply_K phi) = -phi + apply_Kzbar phi
///
/// Mode actions (input mode k, profile phi_k):
///
///   P:      H_k -> mode k, profile H_k r^|k|
///   K:      mode k feeds output mode m = k - 1
///           m >= 0:  2 int_r^1 phi (r/rho)^m drho
///           m <= -1: with p = -m,
///                    -2 int_0^r phi (rho/r)^p drho + 2 r^p int_0^1 phi rho^p drho
///   Kz:     mode k feeds output mode mu = k - 2
///           mu >= 0:  2(mu+1)/r int_r^1 phi (r/rho)^{mu+1} drho - phi(r)
///           mu == -1: -phi(r)
///           mu <= -2: with p = -mu - 1,
///                     2p/r int_0^r phi (rho/r)^p drho - phi(r)
///   Kzbar:  mode k = mu <= 0 only,
///           2(1-mu) r^{-mu} int_0^1 phi rho^{1-mu} drho;
///           positive modes map to zero
///
/// Output modes that fall outside the storage band are dropped. Traces of
/// apply_K vanish identically at r = 1 (exact cancellation by construction).
class DiskOperators {
 public:
  explicit DiskOperators(std::shared_ptr<const PolarGrid> grid);

  const PolarGrid& grid() const { return *grid_; }
  const std::shared_ptr<const PolarGrid>& grid_ptr() const { return grid_; }
  const RadialIntegrator& integrator() const { return integ_; }

  FourierRadialField apply_P(const BoundaryModes& h) const;
  FourierRadialField apply_K(const FourierRadialField& phi) const;
  FourierRadialField apply_Kz(const FourierRadialField& phi) const;
  FourierRadialField apply_Kzbar(const FourierRadialField& phi) const;

 private:
  std::shared_ptr<const PolarGrid> grid_;
  RadialIntegrator integ_;
};

enum class SingularOp { Kz, Kzbar };

/// Randomized lower bound on the L^2 -> L^2 operator norm: max over trials
/// of |op f|_2 / |f|_2 for smooth band-limited fields with valid mode
/// structure (profile of mode k is r^|k| times an even polynomial in r).
/// Both operators have exact norm 1, so estimates must stay <= 1 + eps.
double estimate_operator_norm(const DiskOperators& ops, SingularOp which,
                              int trials, std::uint64_t seed);

}  // namespace ellip
