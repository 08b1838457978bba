#ifndef PCF_ASYMPTOTICS_HPP
#define PCF_ASYMPTOTICS_HPP

#include "pcf/types.hpp"

namespace pcf {

// Truncated Poincare series used as large-argument cross checks and as
// initial data for ODE-based oracles. `last_term_magnitude` is the size of
// the first omitted term (prefactor included), the usual error heuristic.
struct AsymptoticSum {
  Complex value{0.0, 0.0};
  int terms_used = 1;
  double last_term_magnitude = 0.0;
};

// U(a,z) ~ e^{-z^2/4} z^{-a-1/2} sum_s (-1)^s (1/2+a)_{2s} / (s! (2z^2)^s),
// valid |arg z| < 3 pi/4 (DLMF 12.9.1). Terminates for a = -(2n+1/2).
AsymptoticSum asym_u(Complex a, Complex z, int terms);

// V(a,z) ~ sqrt(2/pi) e^{z^2/4} z^{a-1/2} sum_s (1/2-a)_{2s}/(s!(2z^2)^s),
// valid |arg z| < pi/4 (DLMF 12.9.2).
AsymptoticSum asym_v(Complex a, Complex z, int terms);

// E+-(a,x) ~ e^{+-ix^2/4} (x^2)^{-+ia/2-1/4} sum_s (1/2+-ia)_{2s} /
// (s! (+-2i x^2)^s), valid |arg x| < pi/4; the higher coefficients follow
// from the U series transported through z = x e^{-+i pi/4}.
AsymptoticSum asym_e(Complex a, Complex x, int terms, int sign);

// Truncation index minimizing the magnitude of the next term of the U-type
// series, scanned over [0, 200].
int optimal_truncation(Complex a, Complex z);

} // namespace pcf

#endif
