#include <doctest.h>

#include <cmath>
#include <complex>

#include "ellip/classify.hpp"
#include "ellip/errors.hpp"
#include "ellip/rng.hpp"

using namespace ellip;

namespace {

double root_residual(const EquationCoefficients& eq, Cx lambda, bool reversed) {
  const Cx a = reversed ? eq.c : eq.a;
  const Cx c = reversed ? eq.a : eq.c;
  return std::abs(a * lambda * lambda + 2.0 * eq.b * lambda + c);
}

double residual_scale(const EquationCoefficients& eq, Cx lambda) {
  return (std::abs(eq.a) + std::abs(eq.b) + std::abs(eq.c)) *
         (1.0 + std::norm(lambda));
}

}  // namespace

TEST_CASE("Laplace operator: roots +-i, strongly elliptic") {
  const Classification cl = classify({Cx(1.0), Cx(0.0), Cx(1.0)});
  CHECK(cl.elliptic);
  CHECK(cl.strongly_elliptic);
  CHECK(std::abs(cl.roots.lambda1 - Cx(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(cl.roots.lambda2 - Cx(0.0, 1.0)) < 1e-15);
  CHECK_FALSE(cl.roots.reversed);
}

TEST_CASE("perturbed family a=1+tau, b=-i tau, c=1-tau") {
  for (const double tau : {0.0, 0.2, 0.3, 0.5, 0.7, 0.8, 0.99}) {
    const EquationCoefficients eq{Cx(1.0 + tau), Cx(0.0, -tau), Cx(1.0 - tau)};
    const Classification cl = classify(eq);
    CHECK(cl.elliptic);
    CHECK(cl.strongly_elliptic);
    // one root is exactly i, the other -i (1-tau)/(1+tau)
    const Cx other(0.0, -(1.0 - tau) / (1.0 + tau));
    const double d1 = std::min(std::abs(cl.roots.lambda1 - Cx(0.0, 1.0)),
                               std::abs(cl.roots.lambda2 - Cx(0.0, 1.0)));
    const double d2 = std::min(std::abs(cl.roots.lambda1 - other),
                               std::abs(cl.roots.lambda2 - other));
    CHECK(d1 < 1e-14);
    CHECK(d2 < 1e-14);
    for (const Cx lam : {cl.roots.lambda1, cl.roots.lambda2})
      CHECK(root_residual(eq, lam, false) <= 1e-12 * residual_scale(eq, lam));
  }
}

TEST_CASE("wave operator: real roots are inconclusive") {
  const EquationCoefficients eq{Cx(1.0), Cx(0.0), Cx(-1.0)};
  const CharacteristicRoots r = characteristic_roots(eq);
  CHECK(std::abs(std::abs(r.lambda1) - 1.0) < 1e-15);
  CHECK(std::abs(std::abs(r.lambda2) - 1.0) < 1e-15);
  CHECK(std::abs(r.lambda1.imag()) < 1e-15);
  CHECK_THROWS_AS(classify(eq), Inconclusive);
}

TEST_CASE("a = 0 reverses the equation") {
  // 2b t + c = 0 directly has one root; the reversed polynomial
  // c t^2 + 2b t has roots 0 and -2b/c.
  const EquationCoefficients eq{Cx(0.0), Cx(0.0, 1.0), Cx(2.0)};
  const CharacteristicRoots r = characteristic_roots(eq);
  CHECK(r.reversed);
  const double d0 = std::min(std::abs(r.lambda1), std::abs(r.lambda2));
  const Cx nz = std::abs(r.lambda1) > std::abs(r.lambda2) ? r.lambda1
                                                          : r.lambda2;
  CHECK(d0 < 1e-15);
  CHECK(std::abs(nz - Cx(0.0, -1.0)) < 1e-15);
  for (const Cx lam : {r.lambda1, r.lambda2})
    CHECK(root_residual(eq, lam, true) <= 1e-12 * residual_scale(eq, lam));
}

TEST_CASE("a = c = 0 is degenerate") {
  CHECK_THROWS_AS(characteristic_roots({Cx(0.0), Cx(1.0), Cx(0.0)}),
                  DegenerateEquation);
  CHECK_THROWS_AS(classify({Cx(0.0), Cx(1.0), Cx(0.0)}), DegenerateEquation);
}

TEST_CASE("classification is invariant under complex scaling") {
  RandomStream rng(404);
  int conclusive = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const EquationCoefficients eq{rng.in_box(1.0), rng.in_box(1.0),
                                  rng.in_box(1.0)};
    const Cx s = std::polar(rng.uniform(0.25, 4.0), rng.uniform(0.0, 6.28));
    bool ok1 = true, ok2 = true;
    Classification c1, c2;
    try {
      c1 = classify(eq);
    } catch (const Error&) {
      ok1 = false;
    }
    try {
      c2 = classify({s * eq.a, s * eq.b, s * eq.c});
    } catch (const Error&) {
      ok2 = false;
    }
    if (!ok1 || !ok2) continue;
    ++conclusive;
    CHECK(c1.elliptic == c2.elliptic);
    CHECK(c1.strongly_elliptic == c2.strongly_elliptic);
  }
  CHECK(conclusive >= 20);
}

TEST_CASE("random conclusive equations have tiny root residuals") {
  RandomStream rng(808);
  for (int trial = 0; trial < 60; ++trial) {
    const EquationCoefficients eq{rng.in_box(2.0), rng.in_box(2.0),
                                  rng.in_box(2.0)};
    CharacteristicRoots r;
    try {
      r = characteristic_roots(eq);
    } catch (const DegenerateEquation&) {
      continue;
    }
    for (const Cx lam : {r.lambda1, r.lambda2})
      CHECK(root_residual(eq, lam, r.reversed) <=
            1e-12 * residual_scale(eq, lam));
  }
}
