#include "pcf/weber_e.hpp"

#include "pcf/finite_part.hpp"
#include "pcf/gamma.hpp"

#include <algorithm>
#include <cmath>

namespace pcf {

namespace {

const Complex I(0.0, 1.0);

// Endpoint exponents at p = 0.
Complex alpha_vp(Complex a) { return 0.25 + 0.5 * I * a; }
Complex alpha_vm(Complex a) { return 0.25 - 0.5 * I * a; }

AnalyticCofactor vplus_cofactor(Complex a) {
  AnalyticCofactor psi; // (1+2ip)^{-ia/2-3/4}, branch point at p = i/2
  psi.factors = {BranchFactor{Complex(0.0, 2.0), -0.5 * I * a - 0.75, 0}};
  return psi;
}

AnalyticCofactor vminus_cofactor(Complex a) {
  AnalyticCofactor psi; // (1-2ip)^{ia/2-3/4}, branch point at p = -i/2
  psi.factors = {BranchFactor{Complex(0.0, -2.0), 0.5 * I * a - 0.75, 0}};
  return psi;
}

// s = 0 reduces the representation to a Beta function,
//   (1/Gamma(alpha)) int_0^inf p^{alpha-1} (1+cp)^{-(alpha+1/2)} dp
//   = c^{-alpha} sqrt(pi) / Gamma(alpha+1/2),  principal c^{-alpha}.
Complex value_at_origin(Complex alpha, Complex c) {
  return std::exp(-alpha * std::log(c)) * sqrt_pi *
         recip_gamma(alpha + 0.5);
}

EvalResult v_polar(Complex alpha, const AnalyticCofactor& psi,
                   Complex exp_pre_rate, double cut_dir, double s_abs,
                   double s_arg, const EvalConfig& cfg) {
  if (s_abs == 0.0) {
    EvalResult res;
    res.value = value_at_origin(alpha, psi.factors[0].c);
    res.abs_err = 4e-15 * std::abs(res.value);
    res.flags = path_direct;
    return res;
  }
  // rotate towards pure decay, stop 0.1 short of the branch cut direction
  double lo, hi;
  if (cut_dir > 0.0) { // cut at +pi/2 (v_+)
    lo = -1.5 * pi + 0.1;
    hi = 0.5 * pi - 0.1;
  } else { // cut at -pi/2 (v_-)
    lo = -0.5 * pi + 0.1;
    hi = 1.5 * pi - 0.1;
  }
  double theta = std::clamp(-s_arg, lo, hi);
  if (std::cos(s_arg + theta) < 0.01)
    throw Error(ErrorCode::domain,
                "v_plus/v_minus: arg s outside the continuable sector");
  Complex s = std::polar(s_abs, s_arg);
  EvalResult g = gamma_normalized_fp_ray(alpha, psi, s, theta, cfg);
  Complex pre = std::exp(exp_pre_rate * s);
  g.value *= pre;
  g.abs_err *= std::abs(pre);
  return g;
}

} // namespace

EvalResult v_plus_polar(Complex a, double s_abs, double s_arg,
                        const EvalConfig& cfg) {
  return v_polar(alpha_vp(a), vplus_cofactor(a), 0.25 * I, +1.0, s_abs,
                 s_arg, cfg);
}

EvalResult v_minus_polar(Complex a, double s_abs, double s_arg,
                         const EvalConfig& cfg) {
  return v_polar(alpha_vm(a), vminus_cofactor(a), -0.25 * I, -1.0, s_abs,
                 s_arg, cfg);
}

EvalResult v_plus(Complex a, Complex s, const EvalConfig& cfg) {
  return v_plus_polar(a, std::abs(s), std::arg(s), cfg);
}

EvalResult v_minus(Complex a, Complex s, const EvalConfig& cfg) {
  return v_minus_polar(a, std::abs(s), std::arg(s), cfg);
}

ConnectionCoefficients connection_matrix_e(Complex a) {
  Complex epa = std::exp(pi * a);
  Complex eha = std::exp(0.5 * pi * a);
  ConnectionCoefficients m;
  m.m11 = I * epa;
  m.m12 = sqrt_two_pi * recip_gamma(0.5 - I * a) * eha;
  m.m21 = sqrt_two_pi * recip_gamma(0.5 + I * a) * eha;
  m.m22 = -I * epa;
  return m;
}

std::pair<EvalResult, EvalResult> e_pair(Complex a, Complex x,
                                         const EvalConfig& cfg) {
  if (x == Complex(0.0, 0.0)) {
    EvalResult p = v_plus_polar(a, 0.0, 0.0, cfg);
    EvalResult m = v_minus_polar(a, 0.0, 0.0, cfg);
    return {p, m};
  }
  if (x.real() < 0.0) {
    auto [pw, mw] = e_pair(a, -x, cfg);
    ConnectionCoefficients m = connection_matrix_e(a);
    EvalResult em, ep;
    em.value = m.m11 * mw.value + m.m12 * pw.value;
    em.abs_err = std::abs(m.m11) * mw.abs_err + std::abs(m.m12) * pw.abs_err +
                 2e-15 * (std::abs(m.m11 * mw.value) +
                          std::abs(m.m12 * pw.value));
    em.flags = mw.flags | pw.flags | path_connection;
    ep.value = m.m21 * mw.value + m.m22 * pw.value;
    ep.abs_err = std::abs(m.m21) * mw.abs_err + std::abs(m.m22) * pw.abs_err +
                 2e-15 * (std::abs(m.m21 * mw.value) +
                          std::abs(m.m22 * pw.value));
    ep.flags = em.flags;
    return {ep, em};
  }

  // Right half plane including the imaginary axis. Away from the axis both
  // integrals converge on their clamped rays. Inside the band around
  // arg s = +-pi one of the two rays turns non-convergent; there the well
  // conditioned direct value at the reflected point -x (reached by
  // continuing arg s past -+2 pi) plus the connection system supplies the
  // missing component. m11 and m22 never vanish.
  const double s_abs = std::norm(x);
  const double args = 2.0 * std::arg(x); // in [-pi, pi]
  const double band = 0.3;
  if (args <= pi - band && args >= -pi + band) {
    return {v_plus_polar(a, s_abs, args, cfg),
            v_minus_polar(a, s_abs, args, cfg)};
  }
  ConnectionCoefficients m = connection_matrix_e(a);
  if (args > pi - band) {
    // x near +i R_+: E_+ direct; E_-(a,x) from E_-(a,-x) = v_-(args-2pi)
    EvalResult ep = v_plus_polar(a, s_abs, args, cfg);
    EvalResult em_ref = v_minus_polar(a, s_abs, args - 2.0 * pi, cfg);
    EvalResult em;
    em.value = (em_ref.value - m.m12 * ep.value) / m.m11;
    em.abs_err = (em_ref.abs_err + std::abs(m.m12) * ep.abs_err) /
                     std::abs(m.m11) +
                 2e-15 * std::abs(em.value);
    em.flags = em_ref.flags | ep.flags | path_connection;
    return {ep, em};
  }
  // x near -i R_+: E_- direct; E_+(a,x) from E_+(a,-x) = v_+(args+2pi)
  EvalResult em = v_minus_polar(a, s_abs, args, cfg);
  EvalResult ep_ref = v_plus_polar(a, s_abs, args + 2.0 * pi, cfg);
  EvalResult ep;
  ep.value = (ep_ref.value - m.m21 * em.value) / m.m22;
  ep.abs_err = (ep_ref.abs_err + std::abs(m.m21) * em.abs_err) /
                   std::abs(m.m22) +
               2e-15 * std::abs(ep.value);
  ep.flags = ep_ref.flags | em.flags | path_connection;
  return {ep, em};
}

EvalResult e_plus(Complex a, Complex x, const EvalConfig& cfg) {
  return e_pair(a, x, cfg).first;
}

EvalResult e_minus(Complex a, Complex x, const EvalConfig& cfg) {
  return e_pair(a, x, cfg).second;
}

ClassicalPhases classical_phases(Complex a) {
  ClassicalPhases ph;
  Complex epa = std::exp(pi * a);
  Complex root = std::sqrt(1.0 + epa * epa);
  // k(k + 2e^{pi a}) = 1; the reciprocal form avoids cancellation when
  // Re a is large and positive
  ph.k = a.real() >= 0.0 ? 1.0 / (root + epa) : root - epa;
  Complex unit = gamma(0.5 + I * a) * std::sqrt(std::cosh(pi * a)) / sqrt_pi;
  ph.phi2 = -I * std::log(unit); // principal; in (-pi,pi] for real a
  ph.rho = pi / 8.0 + 0.5 * ph.phi2;
  return ph;
}

EvalResult classical_e(Complex a, Complex x, const EvalConfig& cfg) {
  ClassicalPhases ph = classical_phases(a);
  EvalResult ep = e_plus(a, x, cfg);
  Complex f = std::sqrt(2.0) * std::exp(I * (pi / 4.0 + 0.5 * ph.phi2));
  ep.value *= f;
  ep.abs_err *= std::abs(f);
  return ep;
}

EvalResult classical_e_star(Complex a, Complex x, const EvalConfig& cfg) {
  ClassicalPhases ph = classical_phases(a);
  EvalResult em = e_minus(a, x, cfg);
  Complex f = std::sqrt(2.0) * std::exp(-I * (pi / 4.0 + 0.5 * ph.phi2));
  em.value *= f;
  em.abs_err *= std::abs(f);
  return em;
}

std::pair<EvalResult, EvalResult> whittaker_w(Complex a, Complex x,
                                              const EvalConfig& cfg) {
  ClassicalPhases ph = classical_phases(a);
  EvalResult e = classical_e(a, x, cfg);
  EvalResult es = classical_e_star(a, x, cfg);
  Complex sk = std::sqrt(ph.k);
  EvalResult wp, wm;
  wp.value = 0.5 * sk * (e.value + es.value);
  wp.abs_err = 0.5 * std::abs(sk) * (e.abs_err + es.abs_err);
  wp.flags = e.flags | es.flags;
  wm.value = (e.value - es.value) / (2.0 * I * sk);
  wm.abs_err = (e.abs_err + es.abs_err) / (2.0 * std::abs(sk));
  wm.flags = wp.flags;
  return {wp, wm};
}

std::pair<double, double> u_e_link(Complex a, double x,
                                   const EvalConfig& cfg) {
  if (!(x > 0.0))
    throw Error(ErrorCode::domain, "u_e_link: x must be real positive");
  Complex rot_m = std::polar(1.0, -pi / 4.0);
  Complex rot_p = std::polar(1.0, pi / 4.0);

  EvalResult lhs_p = weber_u(I * a, x * rot_m, cfg);
  EvalResult lhs_m = weber_u(-I * a, x * rot_p, cfg);
  auto [ep, em] = e_pair(a, Complex(x, 0.0), cfg);

  Complex scale = std::exp(-0.25 * pi * a);
  Complex rhs_p = scale * std::exp(I * (pi / 8.0)) * ep.value;
  Complex rhs_m = scale * std::exp(-I * (pi / 8.0)) * em.value;
  double rp = std::abs(lhs_p.value - rhs_p) / std::abs(rhs_p);
  double rm = std::abs(lhs_m.value - rhs_m) / std::abs(rhs_m);
  return {rp, rm};
}

} // namespace pcf
