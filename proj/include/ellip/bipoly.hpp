#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ellip/types.hpp"

namespace ellip {

/// Trigonometric polynomial on the unit circle: mode k -> coefficient of e^{ik theta}.
using TrigPolynomial = std::map<int, Cx>;

/// Finite sum  sum c_{ab} z^a zbar^b  with exact symbolic operator actions.
/// Serves as the reference oracle for every numerical kernel in the library.
class BiPolynomial {
 public:
  using Key = std::pair<int, int>;  // (a, b), both >= 0
  using TermMap = std::map<Key, Cx>;

  BiPolynomial() = default;

  static BiPolynomial monomial(int a, int b, Cx coeff = Cx(1.0, 0.0));
  static BiPolynomial constant(Cx c) { return monomial(0, 0, c); }

  /// Accumulates a term; exact-zero results are pruned (canonical form).
  void add_term(int a, int b, Cx c);

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  BiPolynomial& operator+=(const BiPolynomial& o);
  BiPolynomial& operator-=(const BiPolynomial& o);
  BiPolynomial& operator*=(Cx s);
  friend BiPolynomial operator+(BiPolynomial x, const BiPolynomial& y) { return x += y; }
  friend BiPolynomial operator-(BiPolynomial x, const BiPolynomial& y) { return x -= y; }
  friend BiPolynomial operator*(BiPolynomial x, Cx s) { return x *= s; }
  friend BiPolynomial operator*(Cx s, BiPolynomial x) { return x *= s; }
  BiPolynomial times(const BiPolynomial& o) const;

  /// Horner evaluation: terms grouped by a, inner Horner over zbar, outer over z.
  Cx eval(Cx z) const;

  /// Largest |coefficient| difference against another bi-polynomial.
  double coeff_distance(const BiPolynomial& o) const;

  /// max_a (a), max_b (b) over stored terms; 0 for the zero polynomial.
  int degree_z() const;
  int degree_zbar() const;

  /// Sampled sup-norm estimate over the closed disk.
  double sup_estimate(int n_radial = 64, int n_angular = 256) const;

 private:
  TermMap terms_;
};

/// Wirtinger derivatives: dz = (d/dx - i d/dy)/2, dzbar = (d/dx + i d/dy)/2.
BiPolynomial dz(const BiPolynomial& p);
BiPolynomial dzbar(const BiPolynomial& p);

/// L = dz dzbar + tau dz dz, composed symbolically.
BiPolynomial apply_L(const BiPolynomial& p, double tau);

/// sum_k g_k (z - tau zbar)^k + sum_m conj(h_m) zbar^m; lies in the kernel of L.
BiPolynomial exact_solution(const std::vector<Cx>& g, const std::vector<Cx>& h, double tau);

/// Restriction to the unit circle (zbar = 1/z): mode a-b picks up c_{ab}.
TrigPolynomial boundary_trace(const BiPolynomial& p);

/// Harmonic extension of a trig polynomial: k>=0 -> z^k, k<0 -> zbar^{|k|}.
BiPolynomial P_exact(const TrigPolynomial& h);

/// Exact action of the area integral operator
///   K[phi](z) = (1/pi) int_D (1/(zeta-z) + zbar/(1-zeta zbar)) phi dmu:
///   z^a zbar^b -> (-z^a zbar^{b+1} + H(a-b-1)) / (b+1),
/// where H(m) = z^m for m >= 0 and zbar^{-m} otherwise.
/// K[phi] vanishes on the unit circle and satisfies dz dzbar K[phi] = -dz phi.
BiPolynomial K_exact(const BiPolynomial& p);

/// K_z = dz o K (the principal-value kernel 1/(zeta-z)^2 acts this way on
/// polynomial data).
BiPolynomial Kz_exact(const BiPolynomial& p);

/// K_zbar obeys dzbar o K = -I + K_zbar, hence Kzbar_exact(p) = p + dzbar(K_exact(p)).
BiPolynomial Kzbar_exact(const BiPolynomial& p);

/// Exact disk recursion F_0 = P[H], F_n = K[dz F_{n-1}], partial sum S = sum F_n tau^n.
struct DiskSeries {
  std::vector<BiPolynomial> terms;     ///< F_0 .. F_m (stops early on exact termination)
  BiPolynomial partial_sum;            ///< sum_{n<=m} F_n tau^n
  std::vector<double> term_sup;        ///< sampled sup-norm estimate per term
};
DiskSeries solve_disk_exact(const TrigPolynomial& H, double tau, int n_max);

}  // namespace ellip
