#include "ellip/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "ellip/errors.hpp"
#include "ellip/fft.hpp"
#include "ellip/rng.hpp"

namespace ellip {
namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

SeriesState init(const DiskOperators& ops, const BoundaryModes& H,
                 double tau) {
  const auto& grid = ops.grid_ptr();
  const int n = grid->node_count();
  SeriesState st{tau,
                 {},
                 FourierRadialField(grid),
                 FourierRadialField(grid),
                 FourierRadialField(grid),
                 {},
                 {}};
  FourierRadialField F0 = ops.apply_P(H);
  FourierRadialField dF0(grid);
  FourierRadialField dbF0(grid);
  for (const auto& [k, c] : H.modes) {
    if (k >= 1) {
      Cx* prof = dF0.profile(k - 1);
      for (int j = 0; j < n; ++j)
        prof[j] = double(k) * c * std::pow(grid->radii[j], k - 1);
    } else if (k <= -1) {
      Cx* prof = dbF0.profile(k + 1);
      for (int j = 0; j < n; ++j)
        prof[j] = double(-k) * c * std::pow(grid->radii[j], -k - 1);
    }
  }
  st.S = F0;
  st.dS = dF0;
  st.dbS = dbF0;
  st.term_sup.push_back(norm_sup(F0));
  st.dterm_l2.push_back(norm_l2_modes(dF0));
  st.terms.push_back({std::move(F0), std::move(dF0), std::move(dbF0)});
  return st;
}

void step(const DiskOperators& ops, SeriesState& st,
          const FourierRadialField& q) {
  const SeriesTerm& prev = st.terms.back();
  FourierRadialField phi = multiply(q, prev.dF);
  SeriesTerm t{ops.apply_K(phi), ops.apply_Kz(phi), ops.apply_Kzbar(phi)};
  t.dbF.axpy(-1.0, phi);
  const int n = static_cast<int>(st.terms.size());
  const double scale = std::pow(st.tau, n);
  st.S.axpy(scale, t.F);
  st.dS.axpy(scale, t.dF);
  st.dbS.axpy(scale, t.dbF);
  st.term_sup.push_back(norm_sup(t.F));
  st.dterm_l2.push_back(norm_l2_modes(t.dF));
  st.terms.push_back(std::move(t));
}

StoppingRule::Decision StoppingRule::update(int n, double rho_n,
                                            double term_sup) {
  recent_[seen_ % 3] = rho_n;
  ++seen_;
  const int have = std::min(seen_, 3);
  rho_hat_ = 0.0;
  for (int i = 0; i < have; ++i) rho_hat_ = std::max(rho_hat_, recent_[i]);

  if (tau_ * rho_hat_ >= 1.0) {
    tail_valid_ = false;
    if (++stall_ >= 5) return Decision::NonContractiveAbort;
    return Decision::Continue;
  }
  stall_ = 0;
  tail_ = term_sup * std::pow(tau_, n) * (tau_ * rho_hat_) /
          (1.0 - tau_ * rho_hat_);
  tail_valid_ = true;
  return tail_ <= tol_ ? Decision::Converged : Decision::Continue;
}

RunResult run(const DiskOperators& ops, const BoundaryModes& H,
              const ConformalMap& omega, double tau, double tol, int n_max,
              std::uint64_t seed) {
  const auto t_setup = std::chrono::steady_clock::now();
  const FourierRadialField q = quotient_field(omega, ops.grid_ptr());
  RunResult out{init(ops, H, tau), {}};
  SeriesState& st = out.state;
  SolveReport& rep = out.report;
  rep.tau = tau;
  rep.tol = tol;
  rep.grid_J = ops.grid().radial_count;
  rep.grid_M = ops.grid().angular_count;
  rep.grid_K = ops.grid().requested_band;
  rep.timings.setup_s = seconds_since(t_setup);

  const auto t_iter = std::chrono::steady_clock::now();
  rep.status = "converged";
  const double d0 = st.dterm_l2[0];
  StoppingRule rule(tau, tol);
  if (tau > 0.0 && d0 > 0.0) {
    rep.status = "max_terms";
    for (int n = 1; n <= n_max; ++n) {
      step(ops, st, q);
      const double rho_n = st.dterm_l2[n] / st.dterm_l2[n - 1];
      rep.rho.push_back(rho_n);
      const auto decision = rule.update(n, rho_n, st.term_sup[n]);
      rep.tail_bound = rule.tail_bound();
      rep.tail_valid = rule.tail_valid();
      if (st.dterm_l2[n] <= 1e-14 * d0) {
        // Term recursion has hit exact depletion; the remaining tail is
        // zero to roundoff.
        rep.status = "converged";
        rep.tail_bound = 0.0;
        rep.tail_valid = true;
        break;
      }
      if (decision == StoppingRule::Decision::Converged) {
        rep.status = "converged";
        break;
      }
      if (decision == StoppingRule::Decision::NonContractiveAbort)
        throw NonContractive(
            "tau * rho_hat >= 1 for five consecutive steps (rho_hat = " +
            std::to_string(rule.rho_hat()) + ")");
    }
  } else {
    rep.tail_bound = 0.0;
    rep.tail_valid = true;
  }
  rep.m = static_cast<int>(st.terms.size()) - 1;
  rep.empirical_K_norm =
      rep.rho.empty() ? 0.0 : *std::max_element(rep.rho.begin(), rep.rho.end());
  rep.timings.iterate_s = seconds_since(t_iter);

  const auto t_verify = std::chrono::steady_clock::now();
  rep.boundary_error = boundary_error(st.S, H);
  rep.residual = residual(st.S, st.dS, st.dbS, tau, omega,
                          seeded_interior_points(40, seed, 0.9));
  rep.timings.verify_s = seconds_since(t_verify);
  return out;
}

double residual(const FourierRadialField& S, const FourierRadialField& dS,
                const FourierRadialField& dbS, double tau,
                const ConformalMap& omega, const std::vector<Cx>& points) {
  const double h = 1e-3;
  double denom = norm_sup(S);
  if (denom == 0.0) denom = 1.0;

  auto G = [&](Cx z) {
    const Cx w = omega.derivative(z);
    if (std::abs(w) < 1e-10)
      throw DerivativeVanishes("map derivative vanishes at residual point");
    return synthesize_point(dbS, z) +
           tau * (std::conj(w) / w) * synthesize_point(dS, z);
  };

  double worst = 0.0;
  for (const Cx z0 : points) {
    const Cx ex(h, 0.0);
    const Cx ey(0.0, h);
    const Cx dx = (-G(z0 + 2.0 * ex) + 8.0 * G(z0 + ex) - 8.0 * G(z0 - ex) +
                   G(z0 - 2.0 * ex)) /
                  (12.0 * h);
    const Cx dy = (-G(z0 + 2.0 * ey) + 8.0 * G(z0 + ey) - 8.0 * G(z0 - ey) +
                   G(z0 - 2.0 * ey)) /
                  (12.0 * h);
    worst = std::max(worst, std::abs(0.5 * (dx - Cx(0.0, 1.0) * dy)));
  }
  return worst / denom;
}

double residual(const FourierRadialField& S, double tau,
                const ConformalMap& omega, const std::vector<Cx>& points) {
  return residual(S, dz_field(S), dzbar_field(S), tau, omega, points);
}

double boundary_error(const FourierRadialField& S, const BoundaryModes& H) {
  const PolarGrid& g = S.grid();
  const int M = g.angular_count;
  std::vector<Cx> bins(M, Cx(0.0));
  const BoundaryModes trace = boundary_trace_modes(S);
  for (const auto& [k, c] : trace.modes) bins[k >= 0 ? k : M + k] += c;
  for (const auto& [k, c] : H.modes) {
    if (std::abs(k) > g.max_mode)
      throw ModeOverflow("boundary mode " + std::to_string(k) +
                         " exceeds band " + std::to_string(g.max_mode));
    bins[k >= 0 ? k : M + k] -= c;
  }
  fft_radix2(bins, true);
  double worst = 0.0;
  for (const Cx v : bins) worst = std::max(worst, std::abs(v));
  return worst;
}

std::vector<Cx> seeded_interior_points(int count, std::uint64_t seed,
                                       double rmax) {
  RandomStream rng(seed);
  std::vector<Cx> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double r = rmax * std::sqrt(rng.unit());
    const double th = 2.0 * kPi * rng.unit();
    pts.push_back(std::polar(r, th));
  }
  return pts;
}

}  // namespace ellip
