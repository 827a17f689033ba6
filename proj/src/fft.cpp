#include "ellip/fft.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace ellip {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void fft_radix2(std::vector<Cx>& a, bool inverse) {
  const int n = static_cast<int>(a.size());
  if (!is_power_of_two(n)) throw std::invalid_argument("fft size must be a power of two");
  // Bit-reversal permutation.
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const double sgn = inverse ? 1.0 : -1.0;
  for (int len = 2; len <= n; len <<= 1) {
    const double ang = sgn * 2.0 * kPi / len;
    const Cx wlen(std::cos(ang), std::sin(ang));
    for (int i = 0; i < n; i += len) {
      Cx w(1.0, 0.0);
      for (int k = 0; k < len / 2; ++k) {
        Cx u = a[i + k];
        Cx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

}  // namespace ellip
