#ifndef PCF_GAMMA_HPP
#define PCF_GAMMA_HPP

#include "pcf/types.hpp"

namespace pcf {

// sin(pi z), cos(pi z) with argument reduction on the real part, so that
// integer (resp. half-integer) zeros are exact.
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

// Principal branch of log Gamma(z), i.e. the analytic continuation of the
// real logarithm from the positive axis (continuous off the cut (-inf,0]).
// Lanczos approximation for Re z >= 1/2, reflection otherwise.
// Throws Error(gamma_pole) within 1e-14 of a non-positive integer.
Complex log_gamma(Complex z);

// Gamma(z) = exp(log_gamma(z)).
Complex gamma(Complex z);

// 1/Gamma(z) as an entire function: exactly zero at z = 0, -1, -2, ...
// Computed through sin(pi z) Gamma(1-z) / pi for Re z < 1/2 so the zeros
// come from the exact zeros of sin_pi, not from cancellation.
Complex recip_gamma(Complex z);

// Rising factorial (x)_n = x (x+1) ... (x+n-1); empty product is 1.
Complex pochhammer(Complex x, int n);

// Distance from z to the nearest non-positive integer.
double dist_to_nonpositive_integer(Complex z);

} // namespace pcf

#endif
