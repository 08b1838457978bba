#include "pcf/weber_uv.hpp"

#include "pcf/finite_part.hpp"
#include "pcf/gamma.hpp"
#include "pcf/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace pcf {

namespace {

// Endpoint exponents of the two Borel-plane integrands. The u_- integrand
// p^{a/2-3/4}(1+2p)^{-a/2-3/4} has exponent alpha1 at p = 0; the u_+
// integrand G(q) = q^{-3/4-a/2}(1-2q)^{-3/4+a/2} has exponent alpha0 at
// q = 0 and alpha1 at q = 1/2.
Complex alpha_plus_end(Complex a) { return 0.25 + 0.5 * a; }  // alpha1
Complex alpha_minus_end(Complex a) { return 0.25 - 0.5 * a; } // alpha0

// Ray direction for the u_- Laplace integral. The only branch direction is
// arg p = pi (the point p = -1/2), kept at distance >= 0.1; for y on the
// imaginary axis the ray is pulled 0.15 short of +-pi/2 so this route stays
// distinct from the v_+/v_- integrals it is compared against.
double select_theta_uminus(double y_arg) {
  if (std::fabs(y_arg - 0.5 * pi) < 1e-12) return -(0.5 * pi - 0.15);
  if (std::fabs(y_arg + 0.5 * pi) < 1e-12) return 0.5 * pi - 0.15;
  return std::clamp(-y_arg, -(pi - 0.1), pi - 0.1);
}

AnalyticCofactor uminus_cofactor(Complex a) {
  AnalyticCofactor psi;
  psi.factors = {BranchFactor{Complex(2.0, 0.0), -0.5 * a - 0.75, 0}};
  return psi;
}

AnalyticCofactor uplus_cofactor(Complex a) {
  // (1-2q)^{a/2-3/4}, principal on every admissible ray
  AnalyticCofactor psi;
  psi.factors = {BranchFactor{Complex(-2.0, 0.0), 0.5 * a - 0.75, 0}};
  return psi;
}

Complex value_at_origin_u_minus(Complex a) {
  // y = 0 reduces the Laplace integral to a Beta function:
  //   u_-(a,0) = 2^{-1/4-a/2} sqrt(pi) / Gamma(3/4+a/2)
  Complex e = -(0.25 + 0.5 * a) * std::log(2.0);
  return std::exp(e) * sqrt_pi * recip_gamma(0.75 + 0.5 * a);
}

constexpr double near_pole = 1e-3;

} // namespace

EvalResult u_minus_polar(Complex a, double y_abs, double y_arg,
                         const EvalConfig& cfg) {
  if (y_abs == 0.0) {
    EvalResult res;
    res.value = value_at_origin_u_minus(a);
    res.abs_err = 4e-15 * std::abs(res.value);
    res.flags = path_direct;
    return res;
  }
  double theta = select_theta_uminus(y_arg);
  if (std::cos(y_arg + theta) < 0.01)
    throw Error(ErrorCode::domain,
                "u_minus: arg y outside the continuable sector");
  Complex y = std::polar(y_abs, y_arg);
  EvalResult g = gamma_normalized_fp_ray(alpha_plus_end(a), uminus_cofactor(a),
                                         y, theta, cfg);
  Complex pre = std::exp(-0.25 * y);
  g.value *= pre;
  g.abs_err *= std::abs(pre);
  return g;
}

EvalResult u_minus(Complex a, Complex y, const EvalConfig& cfg) {
  return u_minus_polar(a, std::abs(y), std::arg(y), cfg);
}

EvalResult medianization_branch(Complex a, Complex y, int side, double delta,
                                const EvalConfig& cfg) {
  if (side != 1 && side != -1)
    throw Error(ErrorCode::usage, "medianization_branch: side must be +-1");
  EvalResult raw = finite_part_ray(alpha_minus_end(a), uplus_cofactor(a), y,
                                   side * delta, cfg);
  Complex pre = std::exp(0.25 * y);
  raw.value *= pre;
  raw.abs_err *= std::abs(pre);
  return raw;
}

EvalResult u_plus_two_ray(Complex a, Complex y, double delta,
                          const EvalConfig& cfg) {
  if (std::fabs(std::arg(y)) + delta > 0.5 * pi - 0.05)
    throw Error(ErrorCode::domain,
                "u_plus_two_ray: needs Re(y e^{+-i delta}) > 0");
  Complex a0 = alpha_minus_end(a);
  AnalyticCofactor g_cof = uplus_cofactor(a);
  EvalResult gp = gamma_normalized_fp_ray(a0, g_cof, y, delta, cfg);
  EvalResult gm = gamma_normalized_fp_ray(a0, g_cof, y, -delta, cfg);
  EvalResult res;
  Complex pre = std::exp(0.25 * y);
  res.value = 0.5 * pre * (gp.value + gm.value);
  res.abs_err = 0.5 * std::abs(pre) * (gp.abs_err + gm.abs_err);
  res.flags = gp.flags | gm.flags | path_medianized;
  return res;
}

EvalResult u_plus_polar(Complex a, double y_abs, double y_arg,
                        const EvalConfig& cfg) {
  const Complex a0 = alpha_minus_end(a); // exponent at q = 0
  const Complex a1 = alpha_plus_end(a);  // exponent at q = 1/2
  const Complex y = std::polar(y_abs, y_arg);

  // Near the finite-part poles of the q = 1/2 endpoint the segment
  // decomposition cancels badly; the two-ray average is analytic there.
  if (y_abs > 0.0 && dist_to_nonpositive_integer(a1) < near_pole &&
      std::fabs(y_arg) < 0.5 * pi - 0.45) {
    return u_plus_two_ray(a, y, 0.35, cfg);
  }
  if (dist_to_nonpositive_integer(a1) < 1e-8)
    throw Error(ErrorCode::domain,
                "u_plus: removable point of the segment route with arg y too "
                "large for the two-ray route");

  double cap = 7.0 / std::max(1.0, y_abs);
  double r0 = std::min({cfg.split_radius, 0.25, cap});
  double r1 = std::min({cfg.split_radius, 0.25, cap});

  EvalResult res;
  res.flags = path_medianized;

  // head of J at q=0, gamma-normalized (entire through the moment form)
  AnalyticCofactor phi0 = uplus_cofactor(a).with_exp(-y);
  TaylorSeries ts0 = folded_taylor(phi0, r0, cfg);
  auto [head0, err0] = fp_head_moments(a0, ts0, r0);
  if (a0.real() <= 0.0) res.flags |= path_finite_part;
  if (dist_to_nonpositive_integer(a0) < 1e-9) res.flags |= path_limit;

  // middle piece (empty when both split radii reach 1/4)
  Complex mid(0.0, 0.0);
  double err_mid = 0.0;
  if (0.5 - r1 - r0 > 1e-14) {
    UnitIntegrand f;
    double lo = r0, hi = 0.5 - r1;
    f.smooth = [&](double t, double) {
      double q = lo + (hi - lo) * t;
      return std::exp((a0 - 1.0) * std::log(q) +
                      (a1 - 1.0) * std::log1p(-2.0 * q) - q * y) *
             (hi - lo);
    };
    QuadOutcome qr =
        tanh_sinh_unit(f, cfg.rel_tol, cfg.abs_tol, cfg.max_quad_level);
    mid = qr.value;
    err_mid = qr.abs_err;
  }

  // finite-part head of J at q=1/2 in the local variable r = 1/2 - q:
  //   e^{-qy} q^{a0-1} (2r)^{a1-1}
  AnalyticCofactor phi1;
  phi1.scale = std::exp((a1 - 1.0) * std::log(2.0) +
                        (a0 - 1.0) * std::log(0.5) - 0.5 * y);
  phi1.factors = {BranchFactor{Complex(-2.0, 0.0), a0 - 1.0, 0}};
  phi1.rate = y;
  TaylorSeries ts1 = folded_taylor(phi1, r1, cfg);
  auto [head1, err1] = fp_head_raw(a1, ts1, r1);
  if (a1.real() <= 0.0) res.flags |= path_finite_part;

  // u_- share of the decomposition
  EvalResult um = u_minus_polar(a, y_abs, y_arg, cfg);
  res.flags |= um.flags & (path_finite_part | path_limit);
  Complex gamma_a1 = gamma(a1);
  Complex um_tilde = gamma_a1 * um.value;
  double um_tilde_err = std::abs(gamma_a1) * um.abs_err;

  Complex rg0 = recip_gamma(a0);
  Complex pre = std::exp(0.25 * y);
  Complex two_a = std::exp(a * std::log(2.0));
  Complex cosf = cos_pi(0.5 * a - 0.75);

  Complex term_j = pre * (head0 + rg0 * (mid + head1));
  Complex term_u = two_a * cosf * rg0 * um_tilde;
  res.value = term_j + term_u;
  // the two terms can cancel near the poles of the q=1/2 finite part
  res.abs_err = std::abs(pre) * (err0 + std::abs(rg0) * (err_mid + err1)) +
                std::abs(two_a * cosf * rg0) * um_tilde_err +
                1e-15 * (std::abs(term_j) + std::abs(term_u));
  return res;
}

EvalResult u_plus(Complex a, Complex y, const EvalConfig& cfg) {
  return u_plus_polar(a, std::abs(y), std::arg(y), cfg);
}

ConnectionCoefficients connection_matrix_uv(Complex a) {
  ConnectionCoefficients m;
  m.m11 = -sin_pi(a);
  m.m12 = pi * recip_gamma(0.5 + a);
  m.m21 = cos_pi(a) * recip_gamma(0.5 - a);
  m.m22 = sin_pi(a);
  return m;
}

EvalResult weber_u(Complex a, Complex z, const EvalConfig& cfg) {
  if (z == Complex(0.0, 0.0)) return u_minus_polar(a, 0.0, 0.0, cfg);
  if (z.real() > 0.0)
    return u_minus_polar(a, std::norm(z), 2.0 * std::arg(z), cfg);
  if (z.real() < 0.0) {
    Complex w = -z;
    EvalResult ur = weber_u(a, w, cfg);
    EvalResult vr = weber_v(a, w, cfg);
    ConnectionCoefficients m = connection_matrix_uv(a);
    EvalResult res;
    res.value = m.m11 * ur.value + m.m12 * vr.value;
    res.abs_err = std::abs(m.m11) * ur.abs_err + std::abs(m.m12) * vr.abs_err +
                  2e-15 * (std::abs(m.m11 * ur.value) +
                           std::abs(m.m12 * vr.value));
    res.flags = ur.flags | vr.flags | path_connection;
    return res;
  }
  // imaginary axis: continue y = z^2 to arg y = +-pi
  double y_arg = z.imag() > 0.0 ? pi : -pi;
  return u_minus_polar(a, std::norm(z), y_arg, cfg);
}

EvalResult weber_v(Complex a, Complex z, const EvalConfig& cfg) {
  if (z == Complex(0.0, 0.0)) {
    EvalResult up = u_plus_polar(a, 0.0, 0.0, cfg);
    up.value *= sqrt_2_over_pi;
    up.abs_err *= sqrt_2_over_pi;
    return up;
  }
  if (z.real() > 0.0) {
    EvalResult up = u_plus_polar(a, std::norm(z), 2.0 * std::arg(z), cfg);
    up.value *= sqrt_2_over_pi;
    up.abs_err *= sqrt_2_over_pi;
    return up;
  }
  if (z.real() < 0.0) {
    Complex w = -z;
    EvalResult ur = weber_u(a, w, cfg);
    EvalResult vr = weber_v(a, w, cfg);
    ConnectionCoefficients m = connection_matrix_uv(a);
    EvalResult res;
    res.value = m.m21 * ur.value + m.m22 * vr.value;
    res.abs_err = std::abs(m.m21) * ur.abs_err + std::abs(m.m22) * vr.abs_err +
                  2e-15 * (std::abs(m.m21 * ur.value) +
                           std::abs(m.m22 * vr.value));
    res.flags = ur.flags | vr.flags | path_connection;
    return res;
  }
  double y_arg = z.imag() > 0.0 ? pi : -pi;
  EvalResult up = u_plus_polar(a, std::norm(z), y_arg, cfg);
  up.value *= sqrt_2_over_pi;
  up.abs_err *= sqrt_2_over_pi;
  return up;
}

} // namespace pcf
