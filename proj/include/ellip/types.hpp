#pragma once

#include <complex>

namespace ellip {

using Cx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace ellip
