#pragma once

#include <vector>

#include "ellip/types.hpp"

namespace ellip {

bool is_power_of_two(int n);

/// In-place radix-2 transform; size must be a power of two.
/// forward:  A_b = sum_m a_m exp(-2*pi*i*b*m/N)   (unnormalized)
/// inverse:  a_m = sum_b A_b exp(+2*pi*i*b*m/N)   (unnormalized)
void fft_radix2(std::vector<Cx>& a, bool inverse);

}  // namespace ellip
