#include "ellip/bipoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ellip {

BiPolynomial BiPolynomial::monomial(int a, int b, Cx coeff) {
  if (a < 0 || b < 0) throw std::invalid_argument("monomial exponents must be non-negative");
  BiPolynomial p;
  p.add_term(a, b, coeff);
  return p;
}

void BiPolynomial::add_term(int a, int b, Cx c) {
  if (a < 0 || b < 0) throw std::invalid_argument("monomial exponents must be non-negative");
  auto key = Key{a, b};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (c != Cx(0.0, 0.0)) terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == Cx(0.0, 0.0)) terms_.erase(it);
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BiPolynomial& BiPolynomial::operator-=(const BiPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BiPolynomial& BiPolynomial::operator*=(Cx s) {
  if (s == Cx(0.0, 0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

BiPolynomial BiPolynomial::times(const BiPolynomial& o) const {
  BiPolynomial out;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      out.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return out;
}

Cx BiPolynomial::eval(Cx z) const {
  if (terms_.empty()) return {0.0, 0.0};
  const Cx zb = std::conj(z);
  // Terms are ordered by (a, b); walk groups of equal a, Horner in zbar inside,
  // Horner in z across groups (descending a, so iterate in reverse).
  Cx total(0.0, 0.0);
  auto it = terms_.rbegin();
  std::vector<std::pair<int, Cx>> groups;  // (a, value of sum_b c_ab zbar^b)
  while (it != terms_.rend()) {
    int a = it->first.first;
    // Terms with this a are contiguous, b descending in reverse order.
    int prev_b = it->first.second;
    Cx inner = it->second;
    ++it;
    while (it != terms_.rend() && it->first.first == a) {
      int b = it->first.second;
      for (int step = 0; step < prev_b - b; ++step) inner *= zb;
      inner += it->second;
      prev_b = b;
      ++it;
    }
    for (int step = 0; step < prev_b; ++step) inner *= zb;
    groups.emplace_back(a, inner);
  }
  // groups is in descending a; Horner over z.
  int cur_a = groups.front().first;
  total = groups.front().second;
  for (std::size_t gi = 1; gi < groups.size(); ++gi) {
    int a = groups[gi].first;
    for (int step = 0; step < cur_a - a; ++step) total *= z;
    total += groups[gi].second;
    cur_a = a;
  }
  for (int step = 0; step < cur_a; ++step) total *= z;
  return total;
}

double BiPolynomial::coeff_distance(const BiPolynomial& o) const {
  double d = 0.0;
  for (const auto& [k, c] : terms_) {
    auto it = o.terms_.find(k);
    Cx other = (it == o.terms_.end()) ? Cx(0.0, 0.0) : it->second;
    d = std::max(d, std::abs(c - other));
  }
  for (const auto& [k, c] : o.terms_) {
    if (terms_.find(k) == terms_.end()) d = std::max(d, std::abs(c));
  }
  return d;
}

int BiPolynomial::degree_z() const {
  int d = 0;
  for (const auto& [k, c] : terms_) {
    (void)c;
    d = std::max(d, k.first);
  }
  return d;
}

int BiPolynomial::degree_zbar() const {
  int d = 0;
  for (const auto& [k, c] : terms_) {
    (void)c;
    d = std::max(d, k.second);
  }
  return d;
}

double BiPolynomial::sup_estimate(int n_radial, int n_angular) const {
  double best = 0.0;
  for (int i = 0; i <= n_radial; ++i) {
    double r = static_cast<double>(i) / n_radial;
    for (int m = 0; m < n_angular; ++m) {
      double th = 2.0 * kPi * m / n_angular;
      best = std::max(best, std::abs(eval(Cx(r * std::cos(th), r * std::sin(th)))));
    }
  }
  return best;
}

BiPolynomial dz(const BiPolynomial& p) {
  BiPolynomial out;
  for (const auto& [k, c] : p.terms()) {
    if (k.first >= 1) out.add_term(k.first - 1, k.second, static_cast<double>(k.first) * c);
  }
  return out;
}

BiPolynomial dzbar(const BiPolynomial& p) {
  BiPolynomial out;
  for (const auto& [k, c] : p.terms()) {
    if (k.second >= 1) out.add_term(k.first, k.second - 1, static_cast<double>(k.second) * c);
  }
  return out;
}

BiPolynomial apply_L(const BiPolynomial& p, double tau) {
  BiPolynomial out = dz(dzbar(p));
  out += Cx(tau, 0.0) * dz(dz(p));
  return out;
}

BiPolynomial exact_solution(const std::vector<Cx>& g, const std::vector<Cx>& h, double tau) {
  BiPolynomial out;
  // (z - tau zbar)^k via binomial expansion.
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] == Cx(0.0, 0.0)) continue;
    double binom = 1.0;  // C(k, j)
    double tpow = 1.0;   // tau^j
    for (std::size_t j = 0; j <= k; ++j) {
      double sign = (j % 2 == 0) ? 1.0 : -1.0;
      out.add_term(static_cast<int>(k - j), static_cast<int>(j), g[k] * (sign * binom * tpow));
      binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
      tpow *= tau;
    }
  }
  for (std::size_t m = 0; m < h.size(); ++m) {
    if (h[m] == Cx(0.0, 0.0)) continue;
    out.add_term(0, static_cast<int>(m), std::conj(h[m]));
  }
  return out;
}

TrigPolynomial boundary_trace(const BiPolynomial& p) {
  TrigPolynomial t;
  for (const auto& [k, c] : p.terms()) {
    int mode = k.first - k.second;
    t[mode] += c;
    if (t[mode] == Cx(0.0, 0.0)) t.erase(mode);
  }
  return t;
}

BiPolynomial P_exact(const TrigPolynomial& h) {
  BiPolynomial out;
  for (const auto& [k, c] : h) {
    if (k >= 0)
      out.add_term(k, 0, c);
    else
      out.add_term(0, -k, c);
  }
  return out;
}

BiPolynomial K_exact(const BiPolynomial& p) {
  BiPolynomial out;
  for (const auto& [k, c] : p.terms()) {
    const int a = k.first, b = k.second;
    const Cx w = c / static_cast<double>(b + 1);
    out.add_term(a, b + 1, -w);
    const int m = a - b - 1;
    if (m >= 0)
      out.add_term(m, 0, w);
    else
      out.add_term(0, -m, w);
  }
  return out;
}

BiPolynomial Kz_exact(const BiPolynomial& p) { return dz(K_exact(p)); }

BiPolynomial Kzbar_exact(const BiPolynomial& p) {
  BiPolynomial out = p;
  out += dzbar(K_exact(p));
  return out;
}

DiskSeries solve_disk_exact(const TrigPolynomial& H, double tau, int n_max) {
  DiskSeries s;
  BiPolynomial F = P_exact(H);
  double tau_pow = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    s.terms.push_back(F);
    s.term_sup.push_back(F.sup_estimate());
    s.partial_sum += Cx(tau_pow, 0.0) * F;
    BiPolynomial dF = dz(F);
    if (dF.empty()) break;  // all later terms vanish identically
    F = K_exact(dF);
    tau_pow *= tau;
  }
  return s;
}

}  // namespace ellip
