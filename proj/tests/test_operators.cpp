#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "ellip/bipoly.hpp"
#include "ellip/disk_operators.hpp"
#include "ellip/field.hpp"
#include "ellip/radial_integrator.hpp"
#include "ellip/rng.hpp"

using namespace ellip;

namespace {

std::shared_ptr<const PolarGrid> small_grid() {
  static auto g = PolarGrid::create_for_band(32, 12);
  return g;
}

double op_distance(const FourierRadialField& got, const BiPolynomial& want) {
  FourierRadialField d = got;
  d.axpy(Cx(-1.0), from_bipoly(want, got.grid_ptr()));
  return norm_sup(d);
}

}  // namespace

TEST_CASE("cumulative quadrature: monomial profiles, all stored exponents") {
  const auto g = small_grid();
  const RadialIntegrator integ(g, 13);
  const int n = g->node_count();
  // q(rho) = rho^d: lower_j = r_j^{d+1}/(d+p+1), upper_j =
  // r_j^p (1 - r_j^{d-p+1}) / (d-p+1), or r_j^p ln(1/r_j) when d-p+1 = 0
  for (const int p : {0, 1, 2, 5, 13}) {
    for (const int d : {0, 1, 3, 6}) {
      std::vector<Cx> q(n);
      for (int j = 0; j < n; ++j) q[j] = std::pow(g->radii[j], d);
      std::vector<Cx> lo(n), up(n);
      integ.apply(integ.lower(p), q.data(), lo.data());
      integ.apply(integ.upper(p), q.data(), up.data());
      for (int j = 0; j < n; ++j) {
        const double r = g->radii[j];
        const double wlo = std::pow(r, d + 1) / (d + p + 1);
        const int e = d - p + 1;
        const double wup = e == 0
                               ? std::pow(r, p) * std::log(1.0 / r)
                               : std::pow(r, p) * (1.0 - std::pow(r, e)) / e;
        CHECK(std::abs(lo[j] - wlo) < 1e-12);
        CHECK(std::abs(up[j] - wup) < 1e-12);
      }
      CHECK(std::abs(integ.full_integral(p, q.data()) -
                     1.0 / (d + p + 1)) < 1e-13);
    }
  }
}

TEST_CASE("cumulative quadrature: lower plus r^p-weighted upper telescopes") {
  // int_0^{r_j} q (rho/r_j)^p + (r_j)^p int_{r_j}^1 q / rho^p ... the clean
  // identity is at p = 0: lower + upper = full integral at every node.
  const auto g = small_grid();
  const RadialIntegrator integ(g, 2);
  const int n = g->node_count();
  RandomStream rng(17);
  std::vector<Cx> q(n);
  for (auto& v : q) v = rng.in_box(1.0);
  std::vector<Cx> lo(n), up(n);
  integ.apply(integ.lower(0), q.data(), lo.data());
  integ.apply(integ.upper(0), q.data(), up.data());
  const Cx full = integ.full_integral(0, q.data());
  for (int j = 0; j < n; ++j) CHECK(std::abs(lo[j] + up[j] - full) < 1e-12);
}

TEST_CASE("harmonic extension of boundary modes") {
  const auto g = small_grid();
  const DiskOperators ops(g);
  BoundaryModes h;
  h.modes[0] = Cx(1.0);
  h.modes[2] = Cx(0.0, 1.0);
  h.modes[-3] = Cx(2.0, -1.0);
  const FourierRadialField f = ops.apply_P(h);
  const BiPolynomial want = P_exact(h.modes);
  CHECK(op_distance(f, want) < 1e-13);
}

TEST_CASE("area operator on frozen monomials") {
  const auto g = small_grid();
  const DiskOperators ops(g);
  // K(z) = 1 - z zbar
  CHECK(op_distance(ops.apply_K(from_bipoly(BiPolynomial::monomial(1, 0), g)),
                    K_exact(BiPolynomial::monomial(1, 0))) < 1e-12);
  // K(1) = 0, K(zbar) = 0
  CHECK(norm_sup(ops.apply_K(
            from_bipoly(BiPolynomial::constant(Cx(1.0)), g))) < 1e-12);
  CHECK(norm_sup(ops.apply_K(
            from_bipoly(BiPolynomial::monomial(0, 1), g))) < 1e-12);
  // negative output mode: K(zbar^2) has input mode -2, output mode -3
  CHECK(op_distance(ops.apply_K(from_bipoly(BiPolynomial::monomial(0, 2), g)),
                    K_exact(BiPolynomial::monomial(0, 2))) < 1e-12);
}

TEST_CASE("derivative operators on frozen monomials") {
  const auto g = small_grid();
  const DiskOperators ops(g);
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{
           {0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 1}, {3, 2}}) {
    const BiPolynomial p = BiPolynomial::monomial(a, b);
    const FourierRadialField f = from_bipoly(p, g);
    CHECK(op_distance(ops.apply_Kz(f), Kz_exact(p)) < 1e-11);
    CHECK(op_distance(ops.apply_Kzbar(f), Kzbar_exact(p)) < 1e-11);
  }
}

TEST_CASE("operators agree with the oracle on random bi-polynomials") {
  const auto g = small_grid();
  const DiskOperators ops(g);
  RandomStream rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    BiPolynomial p;
    for (int t = 0; t < 7; ++t)
      p.add_term(rng.below(5), rng.below(5), rng.in_box(1.0));
    const FourierRadialField f = from_bipoly(p, g);
    CHECK(op_distance(ops.apply_K(f), K_exact(p)) < 1e-11);
    CHECK(op_distance(ops.apply_Kz(f), Kz_exact(p)) < 1e-10);
    CHECK(op_distance(ops.apply_Kzbar(f), Kzbar_exact(p)) < 1e-10);
  }
}

TEST_CASE("apply_K output has an exactly vanishing trace") {
  const auto g = small_grid();
  const DiskOperators ops(g);
  RandomStream rng(29);
  FourierRadialField f(g);
  for (int k = -8; k <= 8; ++k)
    for (int j = 0; j < g->node_count(); ++j)
      f.at(k, j) = rng.in_box(1.0) * std::pow(g->radii[j], std::abs(k));
  const FourierRadialField Kf = ops.apply_K(f);
  const BoundaryModes tr = boundary_trace_modes(Kf);
  for (const auto& [k, c] : tr.modes) CHECK(std::abs(c) < 1e-13);
}

TEST_CASE("spectral derivatives of apply_K match apply_Kz / apply_Kzbar") {
  const auto g = PolarGrid::create_for_band(48, 10);
  const DiskOperators ops(g);
  const BiPolynomial p =
      BiPolynomial::monomial(2, 1, Cx(1.0, 0.5)) +
      BiPolynomial::monomial(0, 3, Cx(-0.25)) + BiPolynomial::monomial(4, 0);
  const FourierRadialField f = from_bipoly(p, g);
  const FourierRadialField Kf = ops.apply_K(f);

  FourierRadialField d1 = dz_field(Kf);
  d1.axpy(Cx(-1.0), ops.apply_Kz(f));
  CHECK(norm_sup(d1) < 1e-8);

  // dzbar K = -I + Kzbar
  FourierRadialField d2 = dzbar_field(Kf);
  d2 += f;
  d2.axpy(Cx(-1.0), ops.apply_Kzbar(f));
  CHECK(norm_sup(d2) < 1e-8);
}

TEST_CASE("single-field norm ratios hit the known values") {
  const auto g = small_grid();
  const DiskOperators ops(g);
  // Kz(z) = -zbar has the same L2 norm as z: ratio exactly 1
  const FourierRadialField fz = from_bipoly(BiPolynomial::monomial(1, 0), g);
  CHECK(std::abs(norm_lp(ops.apply_Kz(fz), 2.0) / norm_lp(fz, 2.0) - 1.0) <
        1e-12);
  // Kzbar(1) = 1: ratio exactly 1
  const FourierRadialField one =
      from_bipoly(BiPolynomial::constant(Cx(1.0)), g);
  CHECK(std::abs(norm_lp(ops.apply_Kzbar(one), 2.0) / norm_lp(one, 2.0) -
                 1.0) < 1e-12);
}

TEST_CASE("randomized norm estimates stay within the unit bound") {
  const auto g = PolarGrid::create_for_band(32, 16);
  const DiskOperators ops(g);
  const double nz = estimate_operator_norm(ops, SingularOp::Kz, 20, 5);
  const double nzb = estimate_operator_norm(ops, SingularOp::Kzbar, 20, 5);
  CHECK(nz <= 1.005);
  CHECK(nzb <= 1.005);
  CHECK(nz >= 0.5);
  CHECK(nzb >= 0.1);
}
