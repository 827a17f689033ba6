#include "ellip/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "ellip/errors.hpp"
#include "ellip/fft.hpp"

namespace ellip {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;  // ascending order: negative roots first
    nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

std::vector<double> PolarGrid::interpolation_row(double r) const {
  const int n = node_count();
  std::vector<double> row(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (r == radii[i]) {
      row[i] = 1.0;
      return row;
    }
  }
  double denom = 0.0;
  for (int i = 0; i < n; ++i) {
    row[i] = bary[i] / (r - radii[i]);
    denom += row[i];
  }
  for (int i = 0; i < n; ++i) row[i] /= denom;
  return row;
}

std::shared_ptr<const PolarGrid> PolarGrid::create(int radial_count, int angular_count,
                                                   int band) {
  if (radial_count < 2) throw std::invalid_argument("radial_count must be >= 2");
  if (band < 0) throw std::invalid_argument("band must be non-negative");
  if (!is_power_of_two(angular_count) || angular_count < 8)
    throw std::invalid_argument("angular_count must be a power of two >= 8");
  if (angular_count < 4 * band)
    throw std::invalid_argument("angular_count must be >= 4 * band (dealiasing margin)");

  auto g = std::make_shared<PolarGrid>();
  g->radial_count = radial_count;
  g->angular_count = angular_count;
  g->requested_band = band;
  g->max_mode = angular_count / 2 - 1;

  std::vector<double> x, w;
  gauss_legendre(radial_count, x, w);
  g->radii.resize(radial_count + 1);
  g->weights.resize(radial_count);
  for (int j = 0; j < radial_count; ++j) {
    double r = 0.5 * (x[j] + 1.0);
    g->radii[j] = r;
    g->weights[j] = 0.5 * w[j] * r;  // includes the area factor rho
  }
  g->radii[radial_count] = 1.0;

  // Barycentric weights over all nodes, computed in log space to avoid
  // under/overflow of the raw products, then normalized by the largest.
  const int n = radial_count + 1;
  std::vector<double> logw(n, 0.0);
  std::vector<double> sign(n, 1.0);
  double max_log = -1e300;
  for (int i = 0; i < n; ++i) {
    double s = 1.0, lw = 0.0;
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      double d = g->radii[i] - g->radii[k];
      if (d < 0.0) s = -s;
      lw -= std::log(std::abs(d));
    }
    logw[i] = lw;
    sign[i] = s;
    max_log = std::max(max_log, lw);
  }
  g->bary.resize(n);
  for (int i = 0; i < n; ++i) g->bary[i] = sign[i] * std::exp(logw[i] - max_log);

  // Spectral differentiation matrix from the barycentric weights.
  g->diff.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    double diag = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double v = (g->bary[j] / g->bary[i]) / (g->radii[i] - g->radii[j]);
      g->diff[static_cast<std::size_t>(i) * n + j] = v;
      diag -= v;
    }
    g->diff[static_cast<std::size_t>(i) * n + i] = diag;
  }
  return g;
}

std::shared_ptr<const PolarGrid> PolarGrid::create_for_band(int radial_count, int band) {
  int m = 8;
  while (m < 4 * band) m *= 2;
  return create(radial_count, m, band);
}

}  // namespace ellip
