#ifndef PCF_WEBER_E_HPP
#define PCF_WEBER_E_HPP

#include "pcf/types.hpp"
#include "pcf/weber_uv.hpp"

#include <utility>

namespace pcf {

// Phase data of the classical real-line solutions E, E*, W:
//   k = sqrt(1+e^{2 pi a}) - e^{pi a},  rho = pi/8 + phi2/2,
//   phi2 = ph Gamma(1/2 + i a), principal for real a.
// For complex a, e^{i phi2} is replaced by the analytic expression
// Gamma(1/2+ia) sqrt(cosh pi a) / sqrt(pi) and phi2 is its principal log
// over i; this reduces to the phase above on the real axis.
struct ClassicalPhases {
  Complex k;
  Complex rho;
  Complex phi2;
};

ClassicalPhases classical_phases(Complex a);

// Solutions of u'' + (x^2/4 - a) u = 0 via Laplace representations in
// s = x^2:
//   v_+(s) = e^{is/4}/Gamma(ia/2+1/4) *
//            fp int_0^inf e^{-ps} p^{ia/2-3/4} (1+2ip)^{-ia/2-3/4} dp
//   v_-(s) = e^{-is/4}/Gamma(-ia/2+1/4) *
//            fp int_0^inf e^{-ps} p^{-ia/2-3/4} (1-2ip)^{ia/2-3/4} dp
// entire in a: finite parts for Im a >= 1/2 (v_+) resp. Im a <= -1/2 (v_-),
// removable singularities at +-ia/2+1/4 in {0,-1,...} by the moment form.
EvalResult v_plus(Complex a, Complex s, const EvalConfig& cfg);
EvalResult v_minus(Complex a, Complex s, const EvalConfig& cfg);
EvalResult v_plus_polar(Complex a, double s_abs, double s_arg,
                        const EvalConfig& cfg);
EvalResult v_minus_polar(Complex a, double s_abs, double s_arg,
                         const EvalConfig& cfg);

// E+-(a,x) = v+-(x^2); oscillatory Jost pair, entire in a and x, with
//   E+-(a,x) ~ e^{+-i x^2/4} (x^2)^{-+ia/2-1/4},  x -> +inf.
// Left half plane through the connection matrix; the imaginary axis by
// one direct rotated-ray evaluation plus the matrix (the pair solves the
// 2x2 system, m11 = i e^{pi a} never vanishes).
std::pair<EvalResult, EvalResult> e_pair(Complex a, Complex x,
                                         const EvalConfig& cfg);
EvalResult e_plus(Complex a, Complex x, const EvalConfig& cfg);
EvalResult e_minus(Complex a, Complex x, const EvalConfig& cfg);

// Connection matrix of the E pair, (E-(a,-x), E+(a,-x))^T = M (E-, E+)^T:
//   m11 = i e^{pi a},  m12 = sqrt(2 pi)/Gamma(1/2-ia) e^{pi a/2},
//   m21 = sqrt(2 pi)/Gamma(1/2+ia) e^{pi a/2},  m22 = -i e^{pi a}.
ConnectionCoefficients connection_matrix_e(Complex a);

// Classical pair, E = sqrt(2) e^{i pi/4 + i phi2/2} E_+ and
// E* = sqrt(2) e^{-i pi/4 - i phi2/2} E_-. For real a and x these are
// complex conjugates of each other.
EvalResult classical_e(Complex a, Complex x, const EvalConfig& cfg);
EvalResult classical_e_star(Complex a, Complex x, const EvalConfig& cfg);

// Whittaker's standard pair, returned as (W(a,x), W(a,-x)):
//   W(a,x) = sqrt(k)/2 (E + E*),  W(a,-x) = (E - E*)/(2 i sqrt(k)).
// Real a is the validated domain; complex a uses the analytic phase
// replacement above and should be treated as experimental.
std::pair<EvalResult, EvalResult> whittaker_w(Complex a, Complex x,
                                              const EvalConfig& cfg);

// Relative residuals of the two cross-identities tying the families
// together (independent evaluation routes on both sides):
//   U(ia,  x e^{-i pi/4}) = e^{-pi a/4} e^{+i pi/8} E_+(a,x)
//   U(-ia, x e^{+i pi/4}) = e^{-pi a/4} e^{-i pi/8} E_-(a,x)
// Requires x real positive.
std::pair<double, double> u_e_link(Complex a, double x,
                                   const EvalConfig& cfg);

} // namespace pcf

#endif
