#include <doctest.h>

#include <cmath>
#include <complex>

#include "ellip/bipoly.hpp"
#include "ellip/rng.hpp"

using namespace ellip;

namespace {

BiPolynomial mono(int a, int b, Cx c = Cx(1.0)) {
  return BiPolynomial::monomial(a, b, c);
}

}  // namespace

TEST_CASE("arithmetic keeps canonical form and Horner evaluation agrees") {
  BiPolynomial p = mono(2, 0) - mono(0, 1, Cx(0.0, 2.0));
  p += mono(0, 1, Cx(0.0, 2.0));  // cancels exactly
  CHECK(p.terms().size() == 1);
  const Cx z(0.3, -0.7);
  CHECK(std::abs(p.eval(z) - z * z) < 1e-16);

  const BiPolynomial q = mono(1, 0) + mono(0, 1);  // z + zbar = 2x
  const BiPolynomial pq = p.times(q);
  CHECK(std::abs(pq.eval(z) - z * z * (z + std::conj(z))) < 1e-15);
  CHECK(pq.degree_z() == 3);
  CHECK(pq.degree_zbar() == 1);
}

TEST_CASE("Wirtinger derivatives on monomials") {
  const BiPolynomial p = mono(2, 3, Cx(1.0, 1.0));
  const BiPolynomial dp = dz(p);
  const BiPolynomial dbp = dzbar(p);
  CHECK(dp.coeff_distance(mono(1, 3, Cx(2.0, 2.0))) == 0.0);
  CHECK(dbp.coeff_distance(mono(2, 2, Cx(3.0, 3.0))) == 0.0);
  CHECK(dz(BiPolynomial::constant(Cx(5.0))).empty());
}

TEST_CASE("frozen K values") {
  // K(1) = -zbar + zbar = ... via the rule: a=0,b=0 -> (-zbar + H(-1))/1 =
  // -zbar + zbar = 0.
  CHECK(K_exact(mono(0, 0)).empty());
  // K(z): a=1,b=0 -> (-z zbar + H(0))/1 = 1 - z zbar.
  BiPolynomial expect = mono(0, 0) - mono(1, 1);
  CHECK(K_exact(mono(1, 0)).coeff_distance(expect) == 0.0);
  // K(z^2): a=2,b=0 -> (-z^2 zbar + z)/1.
  expect = mono(1, 0) - mono(2, 1);
  CHECK(K_exact(mono(2, 0)).coeff_distance(expect) == 0.0);
  // K(zbar): a=0,b=1 -> (-zbar^2 + zbar^2)/2 = 0.
  CHECK(K_exact(mono(0, 1)).empty());
  // K(z zbar): a=1,b=1 -> (-z zbar^2 + H(-1))/2 = (zbar - z zbar^2)/2.
  expect = mono(0, 1, Cx(0.5)) - mono(1, 2, Cx(0.5));
  CHECK(K_exact(mono(1, 1)).coeff_distance(expect) == 0.0);
}

TEST_CASE("frozen Kz and Kzbar values") {
  CHECK(Kz_exact(mono(0, 0)).empty());
  CHECK(Kz_exact(mono(1, 0)).coeff_distance(mono(0, 1, Cx(-1.0))) == 0.0);
  BiPolynomial expect = mono(0, 0) - mono(1, 1, Cx(2.0));
  CHECK(Kz_exact(mono(2, 0)).coeff_distance(expect) == 0.0);

  CHECK(Kzbar_exact(mono(0, 0)).coeff_distance(mono(0, 0)) == 0.0);
  CHECK(Kzbar_exact(mono(1, 0)).empty());
  CHECK(Kzbar_exact(mono(0, 1)).coeff_distance(mono(0, 1)) == 0.0);
}

TEST_CASE("K vanishes on the circle and inverts -dz dzbar") {
  RandomStream rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    BiPolynomial p;
    for (int t = 0; t < 6; ++t)
      p.add_term(rng.below(5), rng.below(5), rng.in_box(1.0));
    const BiPolynomial Kp = K_exact(p);
    // trace: substitute zbar = 1/z and collect -- must vanish identically
    for (const auto& [mode, coeff] : boundary_trace(Kp))
      CHECK(std::abs(coeff) < 1e-14);
    // dz dzbar K[p] = -dz p
    CHECK(dz(dzbar(Kp)).coeff_distance(dz(p) * Cx(-1.0)) < 1e-14);
    // derivative consistency of the shortcut forms
    CHECK(Kz_exact(p).coeff_distance(dz(Kp)) == 0.0);
    CHECK(Kzbar_exact(p).coeff_distance(p + dzbar(Kp)) == 0.0);
  }
}

TEST_CASE("harmonic extension P_exact") {
  TrigPolynomial h;
  h[0] = Cx(1.0);
  h[3] = Cx(0.0, 2.0);
  h[-2] = Cx(-1.0, 0.5);
  const BiPolynomial P = P_exact(h);
  BiPolynomial expect = mono(0, 0) + mono(3, 0, Cx(0.0, 2.0)) +
                        mono(0, 2, Cx(-1.0, 0.5));
  CHECK(P.coeff_distance(expect) == 0.0);
  CHECK(dz(dzbar(P)).empty());
  // round trip through the trace
  const TrigPolynomial back = boundary_trace(P);
  CHECK(back.size() == h.size());
  for (const auto& [k, c] : h) CHECK(std::abs(back.at(k) - c) == 0.0);
}

TEST_CASE("exact_solution lies in the kernel of L") {
  const std::vector<Cx> g{Cx(1.0), Cx(0.0, -1.0), Cx(0.5, 0.25)};
  const std::vector<Cx> h{Cx(0.0), Cx(2.0), Cx(0.0, 1.0)};
  for (const double tau : {0.0, 0.3, 0.8}) {
    const BiPolynomial f = exact_solution(g, h, tau);
    BiPolynomial residual = apply_L(f, tau);
    CHECK(residual.coeff_distance(BiPolynomial()) < 1e-14);
  }
  // spot value: g = [0, 1], h = [] gives z - tau zbar
  const BiPolynomial lin = exact_solution({Cx(0.0), Cx(1.0)}, {}, 0.4);
  CHECK(lin.coeff_distance(mono(1, 0) + mono(0, 1, Cx(-0.4))) == 0.0);
}

TEST_CASE("disk series: constant data terminates immediately") {
  TrigPolynomial H;
  H[0] = Cx(1.0);
  const DiskSeries s = solve_disk_exact(H, 0.5, 10);
  CHECK(s.terms.size() == 1);
  CHECK(s.partial_sum.coeff_distance(mono(0, 0)) == 0.0);
}

TEST_CASE("disk series: anti-analytic data terminates immediately") {
  TrigPolynomial H;
  H[-1] = Cx(1.0);
  const DiskSeries s = solve_disk_exact(H, 0.7, 10);
  CHECK(s.terms.size() == 1);
  CHECK(s.partial_sum.coeff_distance(mono(0, 1)) == 0.0);
}

TEST_CASE("disk series reproduces the exact solution family") {
  // f = (z - tau zbar)^2 solves L f = 0; its trace is a trig polynomial of
  // degree 2, and the series must land on f once it terminates.
  for (const double tau : {0.2, 0.5, 0.8}) {
    const BiPolynomial f = exact_solution({Cx(0.0), Cx(0.0), Cx(1.0)}, {}, tau);
    const TrigPolynomial H = boundary_trace(f);
    const DiskSeries s = solve_disk_exact(H, tau, 20);
    CHECK(s.partial_sum.coeff_distance(f) < 1e-13);
    CHECK(static_cast<int>(s.terms.size()) <= 4);
  }
}

TEST_CASE("disk series partial sums satisfy the equation to high order") {
  TrigPolynomial H;
  H[2] = Cx(1.0);
  H[-1] = Cx(0.0, 1.0);
  H[4] = Cx(0.25, -0.5);
  const double tau = 0.6;
  const DiskSeries s = solve_disk_exact(H, tau, 18);
  // L S_m = tau^{m+1} dz dz F_m, so the residual is O(tau^{m+1})
  const BiPolynomial res = apply_L(s.partial_sum, tau);
  const int m = static_cast<int>(s.terms.size()) - 1;
  BiPolynomial expect = dz(dz(s.terms.back())) * Cx(std::pow(tau, m + 1));
  CHECK((res - expect).coeff_distance(BiPolynomial()) < 1e-12);
  // trace of the partial sum matches H exactly (each term past F_0 has zero
  // trace)
  const TrigPolynomial tr = boundary_trace(s.partial_sum);
  for (const auto& [k, c] : tr) {
    const auto it = H.find(k);
    const Cx want = it == H.end() ? Cx(0.0) : it->second;
    CHECK(std::abs(c - want) < 1e-14);
  }
}
