#include "ellip/radial_integrator.hpp"

#include <cmath>
#include <stdexcept>

#include "ellip/parallel.hpp"

namespace ellip {
namespace {

// All Lagrange basis values at x through the radial nodes (x must not
// coincide with a node; quadrature points below never do).
void basis_at(const PolarGrid& g, double x, std::vector<double>& vals) {
  const int n = g.node_count();
  vals.resize(n);
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    double t = g.bary[i] / (x - g.radii[i]);
    vals[i] = t;
    s += t;
  }
  const double inv = 1.0 / s;
  for (double& v : vals) v *= inv;
}

}  // namespace

RadialIntegrator::RadialIntegrator(std::shared_ptr<const PolarGrid> grid,
                                   int p_max)
    : grid_(std::move(grid)), p_max_(p_max) {
  if (!grid_) throw std::invalid_argument("RadialIntegrator: null grid");
  if (p_max_ < 0) throw std::invalid_argument("RadialIntegrator: p_max < 0");
  const PolarGrid& g = *grid_;
  const int n = g.node_count();
  const int deg = n - 1;
  lower_.assign(p_max_ + 1, {});
  upper_.assign(p_max_ + 1, {});

  parallel_for(p_max_ + 1, [&](int p) {
    std::vector<double>& lo = lower_[p];
    std::vector<double>& up = upper_[p];
    lo.assign(static_cast<std::size_t>(n) * n, 0.0);
    up.assign(static_cast<std::size_t>(n) * n, 0.0);

    // Exact for l_i(rho) (rho/B)^p, a polynomial of degree deg + p.
    const int q_lo = (deg + p) / 2 + 2;
    std::vector<double> xl, wl, xu, wu;
    gauss_legendre(q_lo, xl, wl);
    const int q_up = deg / 2 + 24;
    gauss_legendre(q_up, xu, wu);

    std::vector<double> vals;
    std::vector<double> gap(n);

    // int_A^B l_i(rho) (rho/B)^p drho, added into dst.
    auto add_lower_gap = [&](double a, double b, double* dst) {
      const double half = 0.5 * (b - a);
      const double mid = 0.5 * (b + a);
      for (int qi = 0; qi < q_lo; ++qi) {
        const double x = mid + half * xl[qi];
        const double w = half * wl[qi] * std::pow(x / b, double(p));
        basis_at(g, x, vals);
        for (int i = 0; i < n; ++i) dst[i] += w * vals[i];
      }
    };

    // int_A^B l_i(rho) (A/rho)^p drho; the weight drops steeply for large p,
    // so the gap is split geometrically to keep each piece well resolved.
    auto add_upper_gap = [&](double a, double b, double* dst) {
      const int nsub = 1 + static_cast<int>(p * std::log(b / a) / 4.0);
      for (int s = 0; s < nsub; ++s) {
        const double sa = a * std::pow(b / a, double(s) / nsub);
        const double sb = a * std::pow(b / a, double(s + 1) / nsub);
        const double half = 0.5 * (sb - sa);
        const double mid = 0.5 * (sb + sa);
        for (int qi = 0; qi < q_up; ++qi) {
          const double x = mid + half * xu[qi];
          const double w = half * wu[qi] * std::pow(a / x, double(p));
          basis_at(g, x, vals);
          for (int i = 0; i < n; ++i) dst[i] += w * vals[i];
        }
      }
    };

    // Lower family, telescoped left to right. Row j of lower(p) integrates
    // against the weight (rho/r_j)^p; restricting row j-1's weight
    // (rho/r_{j-1})^p to the new normalization multiplies by
    // (r_{j-1}/r_j)^p <= 1.
    add_lower_gap(0.0, g.radii[0], lo.data());
    for (int j = 1; j < n; ++j) {
      const double scale = std::pow(g.radii[j - 1] / g.radii[j], double(p));
      std::fill(gap.begin(), gap.end(), 0.0);
      add_lower_gap(g.radii[j - 1], g.radii[j], gap.data());
      double* row = lo.data() + static_cast<std::size_t>(j) * n;
      const double* prev = lo.data() + static_cast<std::size_t>(j - 1) * n;
      for (int i = 0; i < n; ++i) row[i] = scale * prev[i] + gap[i];
    }

    // Upper family, telescoped right to left; row n-1 (r = 1) is zero.
    for (int j = n - 2; j >= 0; --j) {
      const double scale = std::pow(g.radii[j] / g.radii[j + 1], double(p));
      std::fill(gap.begin(), gap.end(), 0.0);
      add_upper_gap(g.radii[j], g.radii[j + 1], gap.data());
      double* row = up.data() + static_cast<std::size_t>(j) * n;
      const double* next = up.data() + static_cast<std::size_t>(j + 1) * n;
      for (int i = 0; i < n; ++i) row[i] = gap[i] + scale * next[i];
    }
  });
}

const std::vector<double>& RadialIntegrator::lower(int p) const {
  if (p < 0 || p > p_max_)
    throw std::out_of_range("RadialIntegrator::lower: p out of range");
  return lower_[p];
}

const std::vector<double>& RadialIntegrator::upper(int p) const {
  if (p < 0 || p > p_max_)
    throw std::out_of_range("RadialIntegrator::upper: p out of range");
  return upper_[p];
}

void RadialIntegrator::apply(const std::vector<double>& mat, const Cx* q,
                             Cx* out) const {
  const int n = grid_->node_count();
  for (int j = 0; j < n; ++j) {
    const double* row = mat.data() + static_cast<std::size_t>(j) * n;
    Cx acc = 0.0;
    for (int i = 0; i < n; ++i) acc += row[i] * q[i];
    out[j] = acc;
  }
}

Cx RadialIntegrator::full_integral(int p, const Cx* q) const {
  const int n = grid_->node_count();
  const double* row = lower(p).data() + static_cast<std::size_t>(n - 1) * n;
  Cx acc = 0.0;
  for (int i = 0; i < n; ++i) acc += row[i] * q[i];
  return acc;
}

}  // namespace ellip
