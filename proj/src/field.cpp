#include "ellip/field.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "ellip/errors.hpp"
#include "ellip/fft.hpp"

namespace ellip {

FourierRadialField::FourierRadialField(std::shared_ptr<const PolarGrid> grid)
    : grid_(std::move(grid)),
      data_(static_cast<std::size_t>(2 * grid_->max_mode + 1) * grid_->node_count(),
            Cx(0.0, 0.0)) {}

Cx* FourierRadialField::profile(int k) {
  return data_.data() + static_cast<std::size_t>(k + grid_->max_mode) * grid_->node_count();
}

const Cx* FourierRadialField::profile(int k) const {
  return data_.data() + static_cast<std::size_t>(k + grid_->max_mode) * grid_->node_count();
}

namespace {
void require_same_grid(const FourierRadialField& a, const FourierRadialField& b) {
  const PolarGrid& ga = a.grid();
  const PolarGrid& gb = b.grid();
  if (ga.radial_count != gb.radial_count || ga.angular_count != gb.angular_count)
    throw DimensionMismatch("fields live on different grids");
}
}  // namespace

FourierRadialField& FourierRadialField::operator+=(const FourierRadialField& o) {
  require_same_grid(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

FourierRadialField& FourierRadialField::operator*=(Cx s) {
  for (auto& v : data_) v *= s;
  return *this;
}

void FourierRadialField::axpy(Cx s, const FourierRadialField& o) {
  require_same_grid(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += s * o.data_[i];
}

FourierRadialField from_bipoly(const BiPolynomial& p, std::shared_ptr<const PolarGrid> grid) {
  FourierRadialField f(grid);
  const PolarGrid& g = f.grid();
  for (const auto& [key, c] : p.terms()) {
    const int k = key.first - key.second;
    const int deg = key.first + key.second;
    if (std::abs(k) > g.max_mode)
      throw ModeOverflow("bi-polynomial mode " + std::to_string(k) + " exceeds band " +
                         std::to_string(g.max_mode));
    Cx* prof = f.profile(k);
    for (int j = 0; j < g.node_count(); ++j) prof[j] += c * std::pow(g.radii[j], deg);
  }
  return f;
}

std::vector<Cx> synthesize_samples(const FourierRadialField& f) {
  const PolarGrid& g = f.grid();
  const int M = g.angular_count;
  const int n = g.node_count();
  std::vector<Cx> out(static_cast<std::size_t>(n) * M);
  std::vector<Cx> bins(M);
  for (int j = 0; j < n; ++j) {
    std::fill(bins.begin(), bins.end(), Cx(0.0, 0.0));
    for (int k = -g.max_mode; k <= g.max_mode; ++k) {
      int bin = k >= 0 ? k : M + k;
      bins[bin] = f.profile(k)[j];
    }
    fft_radix2(bins, true);
    for (int m = 0; m < M; ++m) out[static_cast<std::size_t>(j) * M + m] = bins[m];
  }
  return out;
}

FourierRadialField analyze(std::shared_ptr<const PolarGrid> grid,
                           const std::vector<Cx>& samples) {
  const PolarGrid& g = *grid;
  const int M = g.angular_count;
  const int n = g.node_count();
  if (samples.size() != static_cast<std::size_t>(n) * M)
    throw DimensionMismatch("expected " + std::to_string(n * M) + " samples, got " +
                              std::to_string(samples.size()));
  FourierRadialField f(grid);
  std::vector<Cx> bins(M);
  for (int j = 0; j < n; ++j) {
    for (int m = 0; m < M; ++m) bins[m] = samples[static_cast<std::size_t>(j) * M + m];
    fft_radix2(bins, false);
    for (int k = -g.max_mode; k <= g.max_mode; ++k) {
      int bin = k >= 0 ? k : M + k;
      f.profile(k)[j] = bins[bin] / static_cast<double>(M);
    }
  }
  return f;
}

Cx synthesize_at(const FourierRadialField& f, double r, double theta) {
  const PolarGrid& g = f.grid();
  const std::vector<double> row = g.interpolation_row(r);
  const Cx rot(std::cos(theta), std::sin(theta));
  // Expand each mode's profile at r, then sum modes by running powers of e^{i theta}.
  Cx pos(1.0, 0.0), neg(1.0, 0.0);
  auto value_of_mode = [&](int k) {
    const Cx* prof = f.profile(k);
    Cx v(0.0, 0.0);
    for (int j = 0; j < g.node_count(); ++j) v += row[j] * prof[j];
    return v;
  };
  Cx total = value_of_mode(0);
  for (int k = 1; k <= g.max_mode; ++k) {
    pos *= rot;
    neg *= std::conj(rot);
    total += value_of_mode(k) * pos + value_of_mode(-k) * neg;
  }
  return total;
}

Cx synthesize_point(const FourierRadialField& f, Cx z) {
  return synthesize_at(f, std::abs(z), std::arg(z));
}

FourierRadialField multiply(const FourierRadialField& a, const FourierRadialField& b) {
  require_same_grid(a, b);
  std::vector<Cx> sa = synthesize_samples(a);
  const std::vector<Cx> sb = synthesize_samples(b);
  for (std::size_t i = 0; i < sa.size(); ++i) sa[i] *= sb[i];
  return analyze(a.grid_ptr(), sa);
}

double norm_sup(const FourierRadialField& f) {
  double best = 0.0;
  for (const Cx& v : synthesize_samples(f)) best = std::max(best, std::abs(v));
  return best;
}

double norm_lp(const FourierRadialField& f, double p) {
  const PolarGrid& g = f.grid();
  const std::vector<Cx> s = synthesize_samples(f);
  const double dtheta = 2.0 * kPi / g.angular_count;
  double acc = 0.0;
  for (int j = 0; j < g.radial_count; ++j) {  // interior nodes carry the weights
    double ring = 0.0;
    for (int m = 0; m < g.angular_count; ++m)
      ring += std::pow(std::abs(s[static_cast<std::size_t>(j) * g.angular_count + m]), p);
    acc += ring * g.weights[j] * dtheta;
  }
  return std::pow(acc, 1.0 / p);
}

double norm_l2_modes(const FourierRadialField& f) {
  const PolarGrid& g = f.grid();
  double acc = 0.0;
  for (int k = -g.max_mode; k <= g.max_mode; ++k) {
    const Cx* prof = f.profile(k);
    for (int j = 0; j < g.radial_count; ++j) acc += std::norm(prof[j]) * g.weights[j];
  }
  return std::sqrt(acc * 2.0 * kPi);
}

namespace {

/// Shared core of the Wirtinger derivatives: shift = -1 for dz (with +k/r),
/// shift = +1 for dzbar (with -k/r).
FourierRadialField wirtinger(const FourierRadialField& f, int shift) {
  const PolarGrid& g = f.grid();
  FourierRadialField out(f.grid_ptr());
  const int n = g.node_count();
  std::vector<Cx> deriv(n);
  for (int k = -g.max_mode; k <= g.max_mode; ++k) {
    const int out_mode = k + shift;
    if (out_mode < -g.max_mode || out_mode > g.max_mode) continue;
    const Cx* prof = f.profile(k);
    for (int i = 0; i < n; ++i) {
      Cx acc(0.0, 0.0);
      const double* drow = g.diff.data() + static_cast<std::size_t>(i) * n;
      for (int j = 0; j < n; ++j) acc += drow[j] * prof[j];
      deriv[i] = acc;
    }
    Cx* dst = out.profile(out_mode);
    const double ksign = shift < 0 ? static_cast<double>(k) : -static_cast<double>(k);
    for (int i = 0; i < n; ++i)
      dst[i] += 0.5 * (deriv[i] + ksign * prof[i] / g.radii[i]);
  }
  return out;
}

}  // namespace

FourierRadialField dz_field(const FourierRadialField& f) { return wirtinger(f, -1); }
FourierRadialField dzbar_field(const FourierRadialField& f) { return wirtinger(f, +1); }

BoundaryModes boundary_trace_modes(const FourierRadialField& f) {
  const PolarGrid& g = f.grid();
  BoundaryModes h;
  const int last = g.node_count() - 1;
  for (int k = -g.max_mode; k <= g.max_mode; ++k) {
    Cx v = f.profile(k)[last];
    if (v != Cx(0.0, 0.0)) h.modes[k] = v;
  }
  return h;
}

void write_csv(const FourierRadialField& f, std::ostream& os) {
  const PolarGrid& g = f.grid();
  const std::vector<Cx> s = synthesize_samples(f);
  os << "r,theta,re,im\n";
  char line[160];
  for (int j = 0; j < g.node_count(); ++j) {
    for (int m = 0; m < g.angular_count; ++m) {
      const Cx v = s[static_cast<std::size_t>(j) * g.angular_count + m];
      std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n", g.radii[j], g.theta(m),
                    v.real(), v.imag());
      os << line;
    }
  }
}

}  // namespace ellip
