#include "pcf/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace pcf {

double angular_distance(double a, double b) {
  double d = std::fmod(std::fabs(a - b), 2.0 * pi);
  return std::min(d, 2.0 * pi - d);
}

namespace {

struct Node {
  double t, omt;      // abscissa and its complement, both exact near 0
  double ln_t, ln_omt;
  double w;           // pi cosh(u), before the t(1-t) endpoint damping
};

Node make_node(double u) {
  Node n;
  double w = 0.5 * pi * std::sinh(u);
  // t = 1/(1+e^{-2w}); evaluate through the side that keeps precision
  double e = std::exp(-2.0 * std::fabs(w));
  double small = e / (1.0 + e);
  double big = 1.0 / (1.0 + e);
  double ln_small = -2.0 * std::fabs(w) - std::log1p(e);
  double ln_big = -std::log1p(e);
  if (w >= 0.0) {
    n.t = big; n.omt = small; n.ln_t = ln_big; n.ln_omt = ln_small;
  } else {
    n.t = small; n.omt = big; n.ln_t = ln_small; n.ln_omt = ln_big;
  }
  n.w = pi * std::cosh(u);
  return n;
}

// weight * t^{alpha0-1}(1-t)^{alpha1-1} * smooth, with the powers and the
// t(1-t) factor of the tanh-sinh weight combined in log space
Complex node_value(const UnitIntegrand& f, const Node& n) {
  Complex expo = f.alpha0 * n.ln_t + f.alpha1 * n.ln_omt;
  if (expo.real() < -745.0) return Complex(0.0, 0.0);
  return n.w * std::exp(expo) * f.smooth(n.t, n.omt);
}

} // namespace

QuadOutcome tanh_sinh_unit(const UnitIntegrand& f, double rel_tol,
                           double abs_tol, int max_level) {
  // Range of the double-exponential variable: wide enough that the damped
  // endpoint contribution t^{min Re alpha} drops below ~1e-20.
  double sigma = std::min(f.alpha0.real(), f.alpha1.real());
  sigma = std::clamp(sigma, 1e-3, 1.0);
  double u_max = std::asinh(std::max(3.8, 14.7 / sigma));

  const int level0_points = 14;
  double h = u_max / (level0_points / 2);

  long double sum_re = 0.0L, sum_im = 0.0L, sum_abs = 0.0L;
  {
    Node n0 = make_node(0.0);
    Complex v = node_value(f, n0);
    sum_re = v.real(); sum_im = v.imag(); sum_abs = std::abs(v);
    for (int k = 1; k * h <= u_max; ++k) {
      for (double s : {1.0, -1.0}) {
        Complex v2 = node_value(f, make_node(s * k * h));
        sum_re += v2.real(); sum_im += v2.imag(); sum_abs += std::abs(v2);
      }
    }
  }

  QuadOutcome out;
  Complex prev = Complex(double(sum_re), double(sum_im)) * h;
  double level_diff = std::abs(prev);
  int level = 0;
  while (level < max_level) {
    ++level;
    h *= 0.5;
    // new nodes at odd multiples of the refined step
    for (int k = 1; k * h <= u_max; k += 2) {
      for (double s : {1.0, -1.0}) {
        Complex v = node_value(f, make_node(s * k * h));
        sum_re += v.real(); sum_im += v.imag(); sum_abs += std::abs(v);
      }
    }
    Complex cur = Complex(double(sum_re), double(sum_im)) * h;
    level_diff = std::abs(cur - prev);
    prev = cur;
    double goal = std::max(abs_tol, rel_tol * std::abs(cur));
    if (level >= 2 && level_diff <= 0.25 * goal) {
      out.converged = true;
      break;
    }
  }

  out.value = prev;
  out.levels = level;
  // The level difference overestimates the converged error; keep a floor
  // at the roundoff of the absolute-value sum.
  double cancel_floor = double(sum_abs) * h * 0.5 * 1e-15;
  out.abs_err = std::max(level_diff, cancel_floor);
  if (!out.converged)
    throw Error(ErrorCode::quadrature,
                "tanh_sinh_unit: no convergence within the level cap");
  return out;
}

double ray_truncation(double decay, double growth_power, double net_power,
                      double tol) {
  double base = -std::log(std::max(tol, 1e-300)) + 8.0;
  double r_exp = base / decay;
  for (int i = 0; i < 3; ++i)
    r_exp = (base + std::max(0.0, growth_power) * std::log1p(r_exp)) / decay;
  if (net_power < -1.01) {
    // int_r^inf t^{net} dt = r^{net+1}/(-net-1)
    double r_alg = std::pow(tol * (-net_power - 1.0), 1.0 / (net_power + 1.0));
    return std::min(r_exp, r_alg);
  }
  return r_exp;
}

QuadOutcome integrate_band(const std::function<Complex(double)>& f,
                           double r0, double r1, double rel_tol,
                           double abs_tol, int max_level) {
  UnitIntegrand g;
  if (r1 <= 50.0 * r0 || r1 - r0 <= 50.0) {
    g.smooth = [&](double t, double) {
      double p = r0 + (r1 - r0) * t;
      return f(p) * (r1 - r0);
    };
    return tanh_sinh_unit(g, rel_tol, abs_tol, max_level);
  }
  // log-parametrized: p = r0 e^{u L}, u in (0,1)
  double span = std::log(r1 / r0);
  g.smooth = [&](double t, double) {
    double p = r0 * std::exp(span * t);
    return f(p) * p * span;
  };
  return tanh_sinh_unit(g, rel_tol, abs_tol, max_level);
}

EvalResult laplace_ray(const IntegrandSpec& spec, Complex y,
                       const RayPath& path, const EvalConfig& cfg) {
  const Complex alpha = spec.alpha;
  if (alpha.real() <= 0.0)
    throw Error(ErrorCode::domain,
                "laplace_ray: Re alpha must be positive (use the finite "
                "part layer otherwise)");
  const Complex phase = std::polar(1.0, path.theta);
  const Complex w = y * phase; // decay coefficient in the ray parameter
  if (w.real() <= 0.0)
    throw Error(ErrorCode::nonconvergent_ray,
                "laplace_ray: Re(y e^{i theta}) <= 0");
  double growth = alpha.real() - 1.0, net = alpha.real() - 1.0;
  for (const auto& fct : spec.psi.factors) {
    double dir = std::arg(-1.0 / fct.c); // branch point direction
    if (angular_distance(path.theta, dir) < 1e-8)
      throw Error(ErrorCode::singular_ray,
                  "laplace_ray: ray runs into a branch point of psi");
    growth += std::max(0.0, fct.beta.real());
    net += fct.beta.real();
  }

  AnalyticCofactor psi_t = spec.psi.rotated(path.theta);
  double big_r =
      path.truncation > 0.0
          ? path.truncation
          : ray_truncation(w.real(), growth, net, cfg.rel_tol * 1e-3);
  double r0 = std::min(big_r, 50.0);

  // singular head on [0, r0]
  UnitIntegrand f;
  f.alpha0 = alpha;
  f.alpha1 = 1.0;
  f.smooth = [&](double t, double) {
    return psi_t.value(r0 * t) * std::exp(-w * (r0 * t));
  };
  QuadOutcome q = tanh_sinh_unit(f, cfg.rel_tol, cfg.abs_tol,
                                 cfg.max_quad_level);
  Complex head_scale = std::exp(alpha * std::log(r0));
  Complex value = head_scale * q.value;
  double err = std::abs(head_scale) * q.abs_err;

  // remaining band up to the cutoff
  if (big_r > r0 * (1.0 + 1e-12)) {
    auto fb = [&](double t) {
      return std::exp((alpha - 1.0) * std::log(t)) * psi_t.value(t) *
             std::exp(-w * t);
    };
    QuadOutcome qb = integrate_band(fb, r0, big_r, cfg.rel_tol, cfg.abs_tol,
                                    cfg.max_quad_level);
    value += qb.value;
    err += qb.abs_err;
  }

  // dropped tail, bounded through whichever decay mechanism is active
  double f_end = std::abs(std::exp((alpha - 1.0) * std::log(big_r)) *
                          psi_t.value(big_r) * std::exp(-w * big_r));
  double tail = 2.0 * f_end / w.real();
  if (net < -1.01) tail = std::min(tail, f_end * big_r / (-net - 1.0));

  Complex ray_phase = std::exp(alpha * Complex(0.0, path.theta));
  EvalResult res;
  res.value = ray_phase * value;
  res.abs_err = err + tail;
  res.flags = path_direct;
  return res;
}

EvalResult segment_singular(const IntegrandSpec& spec0,
                            const IntegrandSpec& spec1, Complex y,
                            std::pair<Complex, Complex> endpoints,
                            const EvalConfig& cfg) {
  const Complex z0 = endpoints.first, z1 = endpoints.second;
  const Complex d = z1 - z0;
  const Complex a0 = spec0.alpha, a1 = spec1.alpha;
  if (a0.real() <= 0.0 || a1.real() <= 0.0)
    throw Error(ErrorCode::domain,
                "segment_singular: both Re alpha must be positive");

  // p = z0 + d t:  (p-z0)^{a0-1} (z1-p)^{a1-1} = d^{a0-1} d^{a1-1}
  //                t^{a0-1} (1-t)^{a1-1}  with arg(p-z0) = arg(d)
  UnitIntegrand f;
  f.alpha0 = a0;
  f.alpha1 = a1;
  f.smooth = [&](double t, double) {
    Complex p = z0 + d * t;
    return spec0.psi.value(d * t) * std::exp(-p * y);
  };
  QuadOutcome q =
      tanh_sinh_unit(f, cfg.rel_tol, cfg.abs_tol, cfg.max_quad_level);

  Complex logd = std::log(d);
  Complex scale = std::exp((a0 + a1 - 1.0) * logd);
  EvalResult res;
  res.value = scale * q.value;
  res.abs_err = std::abs(scale) * q.abs_err;
  res.flags = path_direct;
  return res;
}

} // namespace pcf
