#include "ellip/disk_operators.hpp"

#include <algorithm>
#include <cmath>

#include "ellip/errors.hpp"
#include "ellip/parallel.hpp"
#include "ellip/rng.hpp"

namespace ellip {
namespace {

bool all_zero(const Cx* prof, int n) {
  for (int j = 0; j < n; ++j)
    if (prof[j] != Cx(0.0)) return false;
  return true;
}

}  // namespace

DiskOperators::DiskOperators(std::shared_ptr<const PolarGrid> grid)
    : grid_(std::move(grid)), integ_(grid_, grid_->max_mode + 1) {}

FourierRadialField DiskOperators::apply_P(const BoundaryModes& h) const {
  FourierRadialField out(grid_);
  const int n = grid_->node_count();
  for (const auto& [k, coeff] : h.modes) {
    if (std::abs(k) > grid_->max_mode)
      throw ModeOverflow("apply_P: boundary mode " + std::to_string(k) +
                         " exceeds band " + std::to_string(grid_->max_mode));
    Cx* prof = out.profile(k);
    for (int j = 0; j < n; ++j)
      prof[j] = coeff * std::pow(grid_->radii[j], std::abs(k));
  }
  return out;
}

FourierRadialField DiskOperators::apply_K(const FourierRadialField& phi) const {
  FourierRadialField out(grid_);
  const int n = grid_->node_count();
  const int band = grid_->max_mode;
  parallel_for(2 * band + 1, [&](int idx) {
    const int k = idx - band;  // input mode
    const int m = k - 1;       // output mode
    if (m < -band || m > band) return;
    const Cx* in = phi.profile(k);
    if (all_zero(in, n)) return;
    Cx* dst = out.profile(m);
    if (m >= 0) {
      integ_.apply(integ_.upper(m), in, dst);
      for (int j = 0; j < n; ++j) dst[j] *= 2.0;
    } else {
      const int p = -m;
      integ_.apply(integ_.lower(p), in, dst);
      const Cx full = integ_.full_integral(p, in);
      for (int j = 0; j < n; ++j)
        dst[j] = -2.0 * dst[j] + 2.0 * std::pow(grid_->radii[j], p) * full;
    }
  });
  return out;
}

FourierRadialField DiskOperators::apply_Kz(const FourierRadialField& phi) const {
  FourierRadialField out(grid_);
  const int n = grid_->node_count();
  const int band = grid_->max_mode;
  parallel_for(2 * band + 1, [&](int idx) {
    const int k = idx - band;  // input mode
    const int mu = k - 2;      // output mode
    if (mu < -band || mu > band) return;
    const Cx* in = phi.profile(k);
    if (all_zero(in, n)) return;
    Cx* dst = out.profile(mu);
    if (mu >= 0) {
      integ_.apply(integ_.upper(mu + 1), in, dst);
      const double c = 2.0 * (mu + 1);
      for (int j = 0; j < n; ++j) dst[j] = c * dst[j] / grid_->radii[j] - in[j];
    } else if (mu == -1) {
      for (int j = 0; j < n; ++j) dst[j] = -in[j];
    } else {
      const int p = -mu - 1;
      integ_.apply(integ_.lower(p), in, dst);
      const double c = 2.0 * p;
      for (int j = 0; j < n; ++j) dst[j] = c * dst[j] / grid_->radii[j] - in[j];
    }
  });
  return out;
}

FourierRadialField DiskOperators::apply_Kzbar(const FourierRadialField& phi) const {
  FourierRadialField out(grid_);
  const int n = grid_->node_count();
  const int band = grid_->max_mode;
  parallel_for(band + 1, [&](int idx) {
    const int mu = -idx;  // input and output mode, nonpositive
    const Cx* in = phi.profile(mu);
    if (all_zero(in, n)) return;
    const int p = 1 - mu;
    const Cx full = integ_.full_integral(p, in);
    const Cx c = 2.0 * (1.0 - mu) * full;
    Cx* dst = out.profile(mu);
    for (int j = 0; j < n; ++j) dst[j] = c * std::pow(grid_->radii[j], -mu);
  });
  return out;
}

double estimate_operator_norm(const DiskOperators& ops, SingularOp which,
                              int trials, std::uint64_t seed) {
  RandomStream rng(seed);
  const auto& grid = ops.grid_ptr();
  const int n = grid->node_count();
  const int kmax = std::min(8, grid->max_mode);
  double best = 0.0;
  for (int t = 0; t < trials; ++t) {
    FourierRadialField f(grid);
    for (int k = -kmax; k <= kmax; ++k) {
      const Cx u0 = rng.in_box(1.0);
      const Cx u1 = rng.in_box(1.0);
      const Cx u2 = rng.in_box(1.0);
      Cx* prof = f.profile(k);
      for (int j = 0; j < n; ++j) {
        const double r = grid->radii[j];
        const double r2 = r * r;
        prof[j] = std::pow(r, std::abs(k)) * (u0 + r2 * (u1 + r2 * u2));
      }
    }
    const double nf = norm_lp(f, 2.0);
    if (nf == 0.0) continue;
    FourierRadialField g =
        (which == SingularOp::Kz) ? ops.apply_Kz(f) : ops.apply_Kzbar(f);
    best = std::max(best, norm_lp(g, 2.0) / nf);
  }
  return best;
}

}  // namespace ellip
