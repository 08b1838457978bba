#include "pcf/finite_part.hpp"

#include "pcf/gamma.hpp"

#include <algorithm>
#include <cmath>

namespace pcf {

namespace {

constexpr double near_pole_threshold = 1e-3;

// Split radius: at most half the radius of analyticity (geometric ratio
// 1/2 for the Taylor head) and small enough that the folded exponential
// e^{-w t} contributes at most ~e^7 of intermediate growth, which caps the
// cancellation in the head sum at three digits.
double choose_split(const EvalConfig& cfg, double rho, double abs_w) {
  double r = std::min(cfg.split_radius, 0.5 * rho);
  return std::min(r, 7.0 / std::max(1.0, abs_w));
}

} // namespace

TaylorSeries folded_taylor(const AnalyticCofactor& folded, double R,
                           const EvalConfig& cfg) {
  int order = std::max(cfg.series_order, 80) +
              int(3.0 * std::abs(folded.rate) * R);
  for (int tries = 0; tries < 4; ++tries) {
    TaylorSeries ts = folded.taylor(order);
    double peak = 0.0, rn = 1.0;
    std::vector<double> mag(ts.coeff.size());
    for (std::size_t n = 0; n < ts.coeff.size(); ++n) {
      mag[n] = std::abs(ts.coeff[n]) * rn;
      peak = std::max(peak, mag[n]);
      rn *= R;
    }
    bool decayed = true;
    for (std::size_t n = ts.coeff.size() - 4; n < ts.coeff.size(); ++n)
      if (mag[n] > 2e-17 * peak) decayed = false;
    if (decayed) return ts;
    order *= 2;
  }
  throw Error(ErrorCode::series_truncation,
              "finite_part: Taylor data does not resolve the tolerance at "
              "the split radius");
}

std::pair<Complex, double> fp_head_moments(Complex alpha,
                                           const TaylorSeries& ts, double R) {
  long double sr = 0.0L, si = 0.0L, sa = 0.0L;
  for (int n = 0; n <= ts.order(); ++n) {
    Complex t = ts.coeff[n] * moment_coefficient(alpha, n, R);
    sr += t.real();
    si += t.imag();
    sa += std::abs(t);
  }
  return {Complex(double(sr), double(si)), 1e-15 * double(sa)};
}

std::pair<Complex, double> fp_head_raw(Complex alpha, const TaylorSeries& ts,
                                       double R) {
  long double sr = 0.0L, si = 0.0L, sa = 0.0L;
  for (int n = 0; n <= ts.order(); ++n) {
    Complex t = ts.coeff[n] * std::exp((alpha + double(n)) * std::log(R)) /
                (alpha + double(n));
    sr += t.real();
    si += t.imag();
    sa += std::abs(t);
  }
  return {Complex(double(sr), double(si)), 1e-15 * double(sa)};
}

namespace {

// Ordinary tail int_R^{R_tail} t^{alpha-1} phi(t) dt for the folded,
// ray-parametrized cofactor phi (exponential decay already inside).
QuadOutcome tail_quadrature(Complex alpha, const AnalyticCofactor& folded,
                            double R, double decay, const EvalConfig& cfg) {
  double growth = alpha.real() - 1.0, net = alpha.real() - 1.0;
  for (const auto& f : folded.factors) {
    growth += std::max(0.0, f.beta.real());
    net += f.beta.real();
  }
  double big_r = ray_truncation(decay, growth, net, cfg.rel_tol * 1e-3);
  big_r = std::max(big_r, 2.0 * R);
  auto f = [&](double p) {
    return std::exp((alpha - 1.0) * std::log(p)) * folded.value(p);
  };
  QuadOutcome q =
      integrate_band(f, R, big_r, cfg.rel_tol, cfg.abs_tol,
                     cfg.max_quad_level);
  double f_end = std::abs(f(big_r));
  double tail = 2.0 * f_end / decay;
  if (net < -1.01) tail = std::min(tail, f_end * big_r / (-net - 1.0));
  q.abs_err += tail;
  return q;
}

} // namespace

Complex moment_coefficient(Complex alpha, int n, double R) {
  Complex rn = std::exp((alpha + double(n)) * std::log(R));
  if (dist_to_nonpositive_integer(alpha) < near_pole_threshold) {
    Complex prod(1.0, 0.0);
    for (int j = 0; j < n; ++j) prod *= alpha + double(j);
    return rn * prod * recip_gamma(alpha + double(n + 1));
  }
  return rn * recip_gamma(alpha) / (alpha + double(n));
}

Complex finite_part_segment(Complex alpha, const TaylorSeries& phi, double R,
                            const EvalConfig& cfg) {
  if (dist_to_nonpositive_integer(alpha) < 1e-12)
    throw Error(ErrorCode::fp_pole,
                "finite_part_segment: alpha at a pole of the finite part");
  if (R <= 0.0 || !(R < phi.radius))
    throw Error(ErrorCode::domain,
                "finite_part_segment: split radius outside the disk of "
                "analyticity");
  auto [value, roundoff] = fp_head_raw(alpha, phi, R);
  (void)roundoff;
  // geometric bound on the unexpanded remainder
  double ratio = R / phi.radius;
  double last = std::abs(phi.coeff.back()) * std::pow(R, phi.order());
  double bound = ratio < 1.0 ? last * ratio / (1.0 - ratio) : last;
  if (bound > std::max(cfg.abs_tol, 1e2 * cfg.rel_tol *
                                        std::max(std::abs(value), last)))
    throw Error(ErrorCode::series_truncation,
                "finite_part_segment: Taylor remainder exceeds tolerance");
  return value;
}

EvalResult gamma_normalized_fp_ray(Complex alpha, const AnalyticCofactor& phi,
                                   Complex y, double theta,
                                   const EvalConfig& cfg) {
  Complex w = y * std::polar(1.0, theta);
  if (w.real() <= 0.0)
    throw Error(ErrorCode::nonconvergent_ray,
                "gamma_normalized_fp: Re(y e^{i theta}) <= 0");
  AnalyticCofactor phi_t = phi.rotated(theta).with_exp(-w);
  double rho = phi_t.radius();
  double R = choose_split(cfg, rho, std::abs(w));

  TaylorSeries ts = folded_taylor(phi_t, R, cfg);
  auto [head, head_err] = fp_head_moments(alpha, ts, R);
  QuadOutcome tail = tail_quadrature(alpha, phi_t, R, w.real(), cfg);

  Complex rg = recip_gamma(alpha);
  Complex ray_phase = std::exp(alpha * Complex(0.0, theta));
  EvalResult res;
  res.value = ray_phase * (head + rg * tail.value);
  res.abs_err = std::abs(ray_phase) *
                (head_err + std::abs(rg) * tail.abs_err);
  res.flags = alpha.real() > 0.0 ? path_direct : path_finite_part;
  if (dist_to_nonpositive_integer(alpha) < 1e-9) res.flags |= path_limit;
  return res;
}

EvalResult gamma_normalized_fp(Complex alpha, const AnalyticCofactor& phi,
                               Complex y, const EvalConfig& cfg) {
  return gamma_normalized_fp_ray(alpha, phi, y, 0.0, cfg);
}

EvalResult finite_part_ray(Complex alpha, const AnalyticCofactor& phi,
                           Complex y, double theta, const EvalConfig& cfg) {
  if (dist_to_nonpositive_integer(alpha) < 1e-12)
    throw Error(ErrorCode::fp_pole,
                "finite_part_ray: alpha at a pole of the finite part");
  Complex w = y * std::polar(1.0, theta);
  if (w.real() <= 0.0)
    throw Error(ErrorCode::nonconvergent_ray,
                "finite_part_ray: Re(y e^{i theta}) <= 0");
  AnalyticCofactor phi_t = phi.rotated(theta).with_exp(-w);
  double R = choose_split(cfg, phi_t.radius(), std::abs(w));

  TaylorSeries ts = folded_taylor(phi_t, R, cfg);
  auto [head, head_err] = fp_head_raw(alpha, ts, R);
  QuadOutcome tail = tail_quadrature(alpha, phi_t, R, w.real(), cfg);

  Complex ray_phase = std::exp(alpha * Complex(0.0, theta));
  EvalResult res;
  res.value = ray_phase * (head + tail.value);
  res.abs_err = std::abs(ray_phase) * (head_err + tail.abs_err);
  res.flags = alpha.real() > 0.0 ? path_direct : path_finite_part;
  return res;
}

} // namespace pcf
