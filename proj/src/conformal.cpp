#include "ellip/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ellip/bipoly.hpp"
#include "ellip/errors.hpp"
#include "ellip/fft.hpp"

namespace ellip {
namespace {

double cross(Cx o, Cx a, Cx b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

bool within_box(Cx p, Cx q, Cx r) {
  return std::min(p.real(), q.real()) <= r.real() &&
         r.real() <= std::max(p.real(), q.real()) &&
         std::min(p.imag(), q.imag()) <= r.imag() &&
         r.imag() <= std::max(p.imag(), q.imag());
}

bool segments_intersect(Cx a, Cx b, Cx c, Cx d) {
  const double d1 = cross(c, d, a);
  const double d2 = cross(c, d, b);
  const double d3 = cross(a, b, c);
  const double d4 = cross(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && within_box(c, d, a)) return true;
  if (d2 == 0 && within_box(c, d, b)) return true;
  if (d3 == 0 && within_box(a, b, c)) return true;
  if (d4 == 0 && within_box(a, b, d)) return true;
  return false;
}

double point_segment_distance(Cx p, Cx a, Cx b) {
  const Cx ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

double segment_distance(Cx a, Cx b, Cx c, Cx d) {
  if (segments_intersect(a, b, c, d)) return 0.0;
  return std::min(std::min(point_segment_distance(a, c, d),
                           point_segment_distance(b, c, d)),
                  std::min(point_segment_distance(c, a, b),
                           point_segment_distance(d, a, b)));
}

}  // namespace

Cx ConformalMap::map(Cx z) const {
  Cx acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Cx ConformalMap::derivative(Cx z) const {
  Cx acc = 0.0;
  for (int k = degree(); k >= 1; --k) acc = acc * z + double(k) * coeffs[k];
  return acc;
}

UnivalenceReport univalence_check(const ConformalMap& omega) {
  UnivalenceReport rep;

  constexpr int kAngles = 512;
  constexpr int kRadii = 64;
  double min_d = std::abs(omega.derivative(Cx(0.0)));
  for (int a = 0; a < kAngles; ++a) {
    const double th = 2.0 * kPi * a / kAngles;
    const Cx dir = std::polar(1.0, th);
    for (int i = 1; i <= kRadii; ++i) {
      const double r = double(i) / kRadii;
      min_d = std::min(min_d, std::abs(omega.derivative(r * dir)));
    }
  }
  rep.min_abs_derivative = min_d;
  rep.derivative_ok = min_d > 1e-10;

  constexpr int kSegments = 1024;
  std::vector<Cx> pts(kSegments);
  for (int i = 0; i < kSegments; ++i)
    pts[i] = omega.map(std::polar(1.0, 2.0 * kPi * i / kSegments));

  bool simple = true;
  double gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kSegments; ++i) {
    const Cx a = pts[i];
    const Cx b = pts[(i + 1) % kSegments];
    for (int j = i + 2; j < kSegments; ++j) {
      if (i == 0 && j == kSegments - 1) continue;  // cyclically adjacent
      const Cx c = pts[j];
      const Cx d = pts[(j + 1) % kSegments];
      const double dist = segment_distance(a, b, c, d);
      gap = std::min(gap, dist);
      if (dist == 0.0) simple = false;
    }
    if (!simple) break;
  }
  rep.min_boundary_gap = simple ? gap : 0.0;
  rep.boundary_simple = simple;
  rep.pass = rep.derivative_ok && rep.boundary_simple;
  return rep;
}

FourierRadialField quotient_field(const ConformalMap& omega,
                                  std::shared_ptr<const PolarGrid> grid) {
  const int n = grid->node_count();
  const int M = grid->angular_count;
  std::vector<Cx> samples(static_cast<std::size_t>(n) * M);
  for (int j = 0; j < n; ++j) {
    const double r = grid->radii[j];
    for (int m = 0; m < M; ++m) {
      const Cx z = std::polar(r, grid->theta(m));
      const Cx w = omega.derivative(z);
      if (std::abs(w) < 1e-10)
        throw DerivativeVanishes("map derivative below 1e-10 at |z|=" +
                                 std::to_string(r));
      samples[static_cast<std::size_t>(j) * M + m] = std::conj(w) / w;
    }
  }
  return analyze(grid, samples);
}

namespace {

BoundaryModes modes_from_samples(std::vector<Cx> samples, int band) {
  const int M = static_cast<int>(samples.size());
  fft_radix2(samples, false);
  BoundaryModes out;
  for (int k = -band; k <= band; ++k) {
    const int bin = k >= 0 ? k : M + k;
    const Cx c = samples[bin] / double(M);
    if (c != Cx(0.0)) out.modes[k] = c;
  }
  return out;
}

}  // namespace

BoundaryModes transport_boundary(const BoundaryDataSpec& spec,
                                 const ConformalMap& omega, int M, int band) {
  if (const auto* direct = std::get_if<DirectModes>(&spec)) {
    for (const auto& [k, c] : direct->modes.modes) {
      (void)c;
      if (std::abs(k) > band)
        throw ModeOverflow("boundary mode " + std::to_string(k) +
                           " exceeds band " + std::to_string(band));
    }
    return direct->modes;
  }
  if (const auto* samp = std::get_if<BoundarySamples>(&spec)) {
    if (static_cast<int>(samp->values.size()) != M)
      throw SampleCountMismatch("expected " + std::to_string(M) +
                                " boundary samples, got " +
                                std::to_string(samp->values.size()));
    return modes_from_samples(samp->values, band);
  }
  const auto& exact = std::get<ExactTrace>(spec);
  const BiPolynomial f = exact_solution(exact.g, exact.h, exact.tau);
  std::vector<Cx> samples(M);
  for (int m = 0; m < M; ++m) {
    const Cx w = omega.map(std::polar(1.0, 2.0 * kPi * m / M));
    samples[m] = f.eval(w);
  }
  return modes_from_samples(std::move(samples), band);
}

}  // namespace ellip
