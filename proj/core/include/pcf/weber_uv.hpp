#ifndef PCF_WEBER_UV_HPP
#define PCF_WEBER_UV_HPP

#include "pcf/types.hpp"

namespace pcf {

// Connection matrix between the fundamental systems at +inf and -inf:
//   ( U(a,-z) )   ( m11  m12 ) ( U(a,z) )
//   ( V(a,-z) ) = ( m21  m22 ) ( V(a,z) )
// Entries are entire in a via 1/Gamma; det M = -1 for every a.
struct ConnectionCoefficients {
  Complex m11, m12, m21, m22;
};

// Solutions of w'' - (z^2/4 + a) w = 0 through their Borel-plane Laplace
// representations in the variable y = z^2.
//
//   u_-(a,y) = e^{-y/4}/Gamma(1/4+a/2) *
//              fp int_0^inf e^{-p y} p^{a/2-3/4} (1+2p)^{-a/2-3/4} dp
//
// entire in a: for Re a <= -1/2 the integral is a Hadamard finite part and
// the poles of the finite part at a = -(2n+1/2) cancel against the Gamma
// prefactor (the removable singularities handled by the moment form).
// Direct for Re y > 0; wider sectors by ray rotation, limited only by the
// branch direction arg p = pi of (1+2p).
EvalResult u_minus(Complex a, Complex y, const EvalConfig& cfg);

// Continuation-aware form: y = y_abs e^{i y_arg} with y_arg in [-pi, pi]
// tracking which half of the double cover y = z^2 is meant.
EvalResult u_minus_polar(Complex a, double y_abs, double y_arg,
                         const EvalConfig& cfg);

// The subdominant/dominant pair normalized as in the classical tables:
//   U(a,z) = u_-(a, z^2),   V(a,z) = sqrt(2/pi) u_+(a, z^2).
// Left half plane through the connection matrix; the imaginary axis by
// rotated-ray continuation. Entire in a and z.
EvalResult weber_u(Complex a, Complex z, const EvalConfig& cfg);
EvalResult weber_v(Complex a, Complex z, const EvalConfig& cfg);

// u_+(a,y): the balanced (medianized) Laplace average over the rays just
// above and just below R_+, divided by Gamma(1/4-a/2). Computed through the
// segment decomposition
//   u~_+(y) = e^{y/4} J(y) + 2^a cos(pi a/2 - 3 pi/4) u~_-(y),
//   J(y) = int_0^{1/2} e^{-q y} q^{-3/4-a/2} (1-2q)^{-3/4+a/2} dq,
// with Hadamard finite parts at both endpoints of J where divergent.
// Near the poles of the q=1/2 finite part (a near -(2n+1/2)) the two-ray
// average itself is used instead, which is analytic there.
EvalResult u_plus(Complex a, Complex y, const EvalConfig& cfg);
EvalResult u_plus_polar(Complex a, double y_abs, double y_arg,
                        const EvalConfig& cfg);

// Cross-check route kept deliberately independent of the segment
// decomposition: u_+ = (1/Gamma(1/4-a/2)) * (I_+ + I_-)/2 with both
// half-line integrals evaluated on rays e^{+i delta} and e^{-i delta}.
EvalResult u_plus_two_ray(Complex a, Complex y, double delta,
                          const EvalConfig& cfg);

// One-sided half-line integral of the u_+ integrand,
//   I_side(y) = e^{y/4} int_{e^{i side delta} R_+} e^{-q y} G(q) dq,
// side = +1/-1. The branch of (1-2q) is the continuation from
// arg(1-2q) = 0 on (0, 1/2), which is the principal value on these rays.
EvalResult medianization_branch(Complex a, Complex y, int side, double delta,
                                const EvalConfig& cfg);

// Closed-form connection matrix (entire in a):
//   m11 = -sin(pi a), m12 = pi/Gamma(1/2+a),
//   m21 = cos(pi a)/Gamma(1/2-a), m22 = sin(pi a).
ConnectionCoefficients connection_matrix_uv(Complex a);

} // namespace pcf

#endif
