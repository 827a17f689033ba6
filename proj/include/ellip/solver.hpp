#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ellip/conformal.hpp"
#include "ellip/disk_operators.hpp"
#include "ellip/field.hpp"

namespace ellip {

/// One series term with its propagated Wirtinger derivatives. Derivatives
/// are carried through the recursion, never recomputed by differentiating
/// F_n, so no differentiation noise accumulates across terms.
struct SeriesTerm {
  FourierRadialField F;
  FourierRadialField dF;
  FourierRadialField dbF;
};

struct SeriesState {
  double tau = 0.0;
  std::vector<SeriesTerm> terms;  ///< unscaled terms F_0..F_m
  FourierRadialField S;           ///< sum of tau^n F_n
  FourierRadialField dS;
  FourierRadialField dbS;
  std::vector<double> term_sup;   ///< |F_n|_sup
  std::vector<double> dterm_l2;   ///< |dF_n|_2
};

/// F_0 = apply_P(H) with term-wise derivatives of the harmonic extension:
/// mode k >= 1 contributes k H_k r^{k-1} to dF_0 (mode k-1), mode k <= -1
/// contributes |k| H_k r^{|k|-1} to dbF_0 (mode k+1).
SeriesState init(const DiskOperators& ops, const BoundaryModes& H, double tau);

/// With phi = q * dF_{n-1}: appends the triple
///   F_n = K[phi],  dF_n = K_z[phi],  dbF_n = -phi + K_zbar[phi]
/// and accumulates tau^n-weighted partial sums and norms.
void step(const DiskOperators& ops, SeriesState& state,
          const FourierRadialField& q);

/// Truncation logic, kept free of field plumbing so the abort path is unit
/// testable. After appending term n, feed rho_n = |dF_n|_2 / |dF_{n-1}|_2
/// and |F_n|_sup. The series may stop when
///   |F_n|_sup tau^n (tau rho_hat) / (1 - tau rho_hat) <= tol
/// with rho_hat the max of the last three ratios (guards transients). If
/// tau rho_hat >= 1 for five consecutive steps the sum is declared
/// non-contractive.
class StoppingRule {
 public:
  enum class Decision { Continue, Converged, NonContractiveAbort };

  StoppingRule(double tau, double tol) : tau_(tau), tol_(tol) {}

  Decision update(int n, double rho_n, double term_sup);

  double rho_hat() const { return rho_hat_; }
  double tail_bound() const { return tail_; }
  bool tail_valid() const { return tail_valid_; }

 private:
  double tau_;
  double tol_;
  double recent_[3] = {0.0, 0.0, 0.0};
  int seen_ = 0;
  int stall_ = 0;
  double rho_hat_ = 0.0;
  double tail_ = 0.0;
  bool tail_valid_ = false;
};

struct PhaseTimings {
  double setup_s = 0.0;
  double iterate_s = 0.0;
  double verify_s = 0.0;
};

struct SolveReport {
  int m = 0;                      ///< truncation index (terms 0..m)
  std::vector<double> rho;        ///< rho_1..rho_m
  double empirical_K_norm = 0.0;  ///< max rho_n
  double boundary_error = 0.0;
  double residual = 0.0;
  double tail_bound = 0.0;
  bool tail_valid = false;
  std::string status;  ///< "converged" or "max_terms"
  double tau = 0.0;
  double tol = 0.0;
  int grid_J = 0;
  int grid_M = 0;
  int grid_K = 0;
  double alpha = 0.0;  ///< declared smoothness metadata, echoed by the CLI
  PhaseTimings timings;
};

struct RunResult {
  SeriesState state;
  SolveReport report;
};

/// Full solve: quotient field from the map, term recursion until the tail
/// bound drops under tol (or n_max), then boundary-error and residual
/// verification. The seed drives the residual sample points. Throws
/// NonContractive when decay stalls as described on StoppingRule.
RunResult run(const DiskOperators& ops, const BoundaryModes& H,
              const ConformalMap& omega, double tau, double tol, int n_max,
              std::uint64_t seed = 20260814);

/// Max over points of |d/dz G|, G = dbS + tau (conj(omega')/omega') dS,
/// normalized by |S|_sup. The outer d/dz uses fourth-order centered finite
/// differences with step 1e-3 on synthesized point values, independent of
/// the spectral machinery. Points must satisfy |z| <= 0.9.
double residual(const FourierRadialField& S, const FourierRadialField& dS,
                const FourierRadialField& dbS, double tau,
                const ConformalMap& omega, const std::vector<Cx>& points);

/// Same, with dS and dbS taken spectrally from S (for fields that did not
/// come out of a run, e.g. control cases).
double residual(const FourierRadialField& S, double tau,
                const ConformalMap& omega, const std::vector<Cx>& points);

/// sup over the M boundary angles of |S(e^{i theta}) - H(theta)|.
double boundary_error(const FourierRadialField& S, const BoundaryModes& H);

/// Deterministic area-uniform sample of the disk |z| <= rmax.
std::vector<Cx> seeded_interior_points(int count, std::uint64_t seed,
                                       double rmax);

}  // namespace ellip
