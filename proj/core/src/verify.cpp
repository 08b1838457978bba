#include "pcf/verify.hpp"

#include "pcf/asymptotics.hpp"
#include "pcf/finite_part.hpp"
#include "pcf/gamma.hpp"
#include "pcf/weber_e.hpp"
#include "pcf/weber_uv.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace pcf {

namespace {

const Complex I(0.0, 1.0);

int family_of(FunctionId fn) {
  return (fn == FunctionId::U || fn == FunctionId::V) ? 0 : 1;
}

// Local coefficients of w'' = (q0 + q1 u + q2 u^2) w around a base point.
// The coefficient polynomial of both Weber forms is globally quadratic, so
// the local series below are exact to all orders.
struct LocalOde {
  Complex q0, q1, q2;
};

LocalOde local_ode(int family, Complex a, Complex z) {
  if (family == 0) return {0.25 * z * z + a, 0.5 * z, Complex(0.25, 0.0)};
  return {a - 0.25 * z * z, -0.5 * z, Complex(-0.25, 0.0)};
}

std::vector<Complex> ode_series(const LocalOde& q, Complex c0, Complex c1,
                                int order) {
  std::vector<Complex> c(order + 1, Complex(0.0, 0.0));
  c[0] = c0;
  if (order >= 1) c[1] = c1;
  for (int n = 0; n + 2 <= order; ++n) {
    Complex s = q.q0 * c[n];
    if (n >= 1) s += q.q1 * c[n - 1];
    if (n >= 2) s += q.q2 * c[n - 2];
    c[n + 2] = s / double((n + 1) * (n + 2));
  }
  return c;
}

Complex horner(const std::vector<Complex>& c, Complex u) {
  Complex s(0.0, 0.0);
  for (std::size_t k = c.size(); k-- > 0;) s = s * u + c[k];
  return s;
}

Complex horner_deriv(const std::vector<Complex>& c, Complex u) {
  Complex s(0.0, 0.0);
  for (std::size_t k = c.size(); k-- > 1;) s = s * u + double(k) * c[k];
  return s;
}

std::string fmt(Complex z) {
  std::ostringstream os;
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

// Lagrange extrapolation to 0 from samples at three offsets; removes both
// the linear and the quadratic term of the approach to a removable point.
Complex extrapolate_to_zero(const double d[3], const Complex g[3]) {
  Complex s(0.0, 0.0);
  for (int i = 0; i < 3; ++i) {
    double w = 1.0;
    for (int j = 0; j < 3; ++j)
      if (j != i) w *= d[j] / (d[j] - d[i]);
    s += w * g[i];
  }
  return s;
}

void add_case(SuiteReport& rep, std::string label, double residual,
              double tol) {
  rep.cases.push_back(SuiteCase{std::move(label), residual, tol,
                                residual <= tol});
  rep.worst_residual = std::max(rep.worst_residual, residual);
}

// Fit the local ODE model to the five evaluator samples around z and
// return (c1, model coefficients A + c1 B, samples).
struct LocalFit {
  Complex c1;
  std::vector<Complex> a_part, b_part;
  Complex hc;
  Complex w0, wp1, wm1, wp2, wm2;
};

LocalFit fit_local_model(const std::function<Complex(Complex)>& fn,
                         int family, Complex a, Complex z, double h) {
  LocalFit f;
  Complex dir = (z == Complex(0.0, 0.0)) ? Complex(1.0, 0.0)
                                         : z / std::abs(z);
  f.hc = h * dir;
  f.w0 = fn(z);
  f.wp1 = fn(z + f.hc);
  f.wm1 = fn(z - f.hc);
  f.wp2 = fn(z + 2.0 * f.hc);
  f.wm2 = fn(z - 2.0 * f.hc);

  LocalOde q = local_ode(family, a, z);
  const int order = 30;
  f.a_part = ode_series(q, f.w0, Complex(0.0, 0.0), order);
  f.b_part = ode_series(q, Complex(0.0, 0.0), Complex(1.0, 0.0), order);

  // solve c1 from the odd part of the +-h samples; B is odd-dominated so
  // the denominator is ~2h
  Complex odd_data = f.wp1 - f.wm1;
  Complex odd_a = horner(f.a_part, f.hc) - horner(f.a_part, -f.hc);
  Complex odd_b = horner(f.b_part, f.hc) - horner(f.b_part, -f.hc);
  f.c1 = (odd_data - odd_a) / odd_b;
  return f;
}

} // namespace

const char* to_string(FunctionId fn) {
  switch (fn) {
    case FunctionId::U: return "U";
    case FunctionId::V: return "V";
    case FunctionId::Eplus: return "E+";
    case FunctionId::Eminus: return "E-";
    case FunctionId::E: return "E";
    case FunctionId::Estar: return "Estar";
    case FunctionId::W: return "W";
  }
  return "?";
}

const char* to_string(SuiteId suite) {
  switch (suite) {
    case SuiteId::lemma: return "lemma";
    case SuiteId::connection_uv: return "connection_uv";
    case SuiteId::connection_e: return "connection_e";
    case SuiteId::eestar: return "eestar";
    case SuiteId::link: return "link";
    case SuiteId::asymptotic: return "asymptotic";
    case SuiteId::ode: return "ode";
    case SuiteId::wronskian: return "wronskian";
    case SuiteId::all: return "all";
  }
  return "?";
}

bool suite_from_string(const std::string& name, SuiteId& out) {
  for (SuiteId s : {SuiteId::lemma, SuiteId::connection_uv,
                    SuiteId::connection_e, SuiteId::eestar, SuiteId::link,
                    SuiteId::asymptotic, SuiteId::ode, SuiteId::wronskian,
                    SuiteId::all}) {
    if (name == to_string(s)) {
      out = s;
      return true;
    }
  }
  return false;
}

bool function_from_string(const std::string& name, FunctionId& out) {
  for (FunctionId f : {FunctionId::U, FunctionId::V, FunctionId::Eplus,
                       FunctionId::Eminus, FunctionId::E, FunctionId::Estar,
                       FunctionId::W}) {
    if (name == to_string(f)) {
      out = f;
      return true;
    }
  }
  return false;
}

bool SuiteReport::all_pass() const {
  for (const auto& c : cases)
    if (!c.pass) return false;
  return true;
}

EvalResult eval_function_full(FunctionId fn, Complex a, Complex z,
                              const EvalConfig& cfg) {
  switch (fn) {
    case FunctionId::U: return weber_u(a, z, cfg);
    case FunctionId::V: return weber_v(a, z, cfg);
    case FunctionId::Eplus: return e_plus(a, z, cfg);
    case FunctionId::Eminus: return e_minus(a, z, cfg);
    case FunctionId::E: return classical_e(a, z, cfg);
    case FunctionId::Estar: return classical_e_star(a, z, cfg);
    case FunctionId::W: return whittaker_w(a, z, cfg).first;
  }
  throw Error(ErrorCode::usage, "eval_function: unknown function id");
}

Complex eval_function(FunctionId fn, Complex a, Complex z,
                      const EvalConfig& cfg) {
  return eval_function_full(fn, a, z, cfg).value;
}

double ode_residual_fn(const std::function<Complex(Complex)>& fn, int family,
                       Complex a, Complex z, double h) {
  if (!(h > 0.0))
    throw Error(ErrorCode::stencil, "ode_residual: h must be positive");
  LocalFit f = fit_local_model(fn, family, a, z, h);

  Complex wpp = 2.0 * (f.a_part[2] + f.c1 * f.b_part[2]);
  double denom = std::abs(0.25 * z * z * f.w0) + std::abs(a * f.w0) +
                 std::abs(wpp);
  if (denom == 0.0) denom = std::abs(f.w0) + 1e-300;

  auto mismatch = [&](Complex u, Complex sample) {
    Complex model = horner(f.a_part, u) + f.c1 * horner(f.b_part, u);
    return std::abs(sample - model) / (0.5 * std::norm(u) * denom);
  };
  double r = mismatch(f.hc, f.wp1);
  r = std::max(r, mismatch(-f.hc, f.wm1));
  r = std::max(r, mismatch(2.0 * f.hc, f.wp2));
  r = std::max(r, mismatch(-2.0 * f.hc, f.wm2));
  return r;
}

double ode_residual(FunctionId fn, Complex a, Complex z, double h,
                    const EvalConfig& cfg) {
  auto call = [&](Complex zz) { return eval_function(fn, a, zz, cfg); };
  return ode_residual_fn(call, family_of(fn), a, z, h);
}

Complex model_derivative(FunctionId fn, Complex a, Complex z, double h,
                         const EvalConfig& cfg) {
  auto call = [&](Complex zz) { return eval_function(fn, a, zz, cfg); };
  return fit_local_model(call, family_of(fn), a, z, h).c1;
}

Complex wronskian(FunctionId f1, FunctionId f2, Complex a, Complex z,
                  double h, const EvalConfig& cfg) {
  Complex dir = (z == Complex(0.0, 0.0)) ? Complex(1.0, 0.0)
                                         : z / std::abs(z);
  Complex hc = h * dir;
  auto deriv_at = [&](FunctionId fn, Complex step) {
    Complex fp2 = eval_function(fn, a, z + 2.0 * step, cfg);
    Complex fp1 = eval_function(fn, a, z + step, cfg);
    Complex fm1 = eval_function(fn, a, z - step, cfg);
    Complex fm2 = eval_function(fn, a, z - 2.0 * step, cfg);
    return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * step);
  };
  auto deriv = [&](FunctionId fn) {
    // one Richardson refinement of the 4th-order stencil
    Complex d1 = deriv_at(fn, hc);
    Complex d2 = deriv_at(fn, 0.5 * hc);
    return (16.0 * d2 - d1) / 15.0;
  };
  Complex v1 = eval_function(f1, a, z, cfg);
  Complex v2 = eval_function(f2, a, z, cfg);
  return v1 * deriv(f2) - deriv(f1) * v2;
}

std::pair<Complex, Complex> propagate_weber(int family, Complex a, Complex z0,
                                            Complex w0, Complex w0p,
                                            Complex z1) {
  Complex pos = z0, w = w0, wp = w0p;
  double total = std::abs(z1 - z0);
  if (total == 0.0) return {w, wp};
  Complex unit = (z1 - z0) / total;
  double done = 0.0;
  const int order = 36;
  while (done < total) {
    LocalOde q = local_ode(family, a, pos);
    double step = std::min(total - done,
                           1.0 / std::sqrt(std::abs(q.q0) + 2.0));
    std::vector<Complex> c = ode_series(q, w, wp, order);
    Complex u = step * unit;
    w = horner(c, u);
    wp = horner_deriv(c, u);
    pos += u;
    done += step;
  }
  return {w, wp};
}

namespace {

// ---------------------------------------------------------------- suites

SuiteReport suite_lemma(const EvalConfig& cfg) {
  SuiteReport rep;
  rep.suite_id = "lemma";
  const double deltas[3] = {1e-2, 1e-3, 1e-4};

  struct Cof {
    const char* name;
    AnalyticCofactor phi;
  };
  AnalyticCofactor plain;
  AnalyticCofactor weberish;
  weberish.factors = {BranchFactor{Complex(2.0, 0.0), Complex(-0.75, 0.0), 0}};
  const Cof cofs[2] = {{"exp", plain}, {"exp*(1+2p)^-3/4", weberish}};
  const Complex y(1.0, 0.0);

  for (const auto& cof : cofs) {
    TaylorSeries folded = cof.phi.with_exp(-y).taylor(8);
    for (int k = 0; k <= 3; ++k) {
      Complex ck = folded.coeff[k];                  // phi^(k)(0)/k!
      Complex lim2_target = std::pow(-1.0, k) * ck * std::tgamma(k + 1.0);

      // (B): g(-k+delta) -> (-1)^k phi^(k)(0), linear in delta
      Complex gs[3];
      for (int i = 0; i < 3; ++i)
        gs[i] =
            gamma_normalized_fp(Complex(-k + deltas[i], 0.0), cof.phi, y, cfg)
                .value;
      Complex extrap = extrapolate_to_zero(deltas, gs);
      double scale = std::max(1.0, std::abs(lim2_target));
      add_case(rep,
               "lim2 k=" + std::to_string(k) + " phi=" + cof.name +
                   " extrapolated",
               std::abs(extrap - lim2_target) / scale, 1e-8);

      Complex at_pole =
          gamma_normalized_fp(Complex(double(-k), 0.0), cof.phi, y, cfg).value;
      add_case(rep,
               "lim2 k=" + std::to_string(k) + " phi=" + cof.name +
                   " limit path",
               std::abs(at_pole - lim2_target) / scale, 1e-10);

      // (A): eps * fp int p^{-k-1+eps} phi -> phi^(k)(0)/k!
      Complex fs[3];
      for (int i = 0; i < 3; ++i) {
        Complex alpha(-k + deltas[i], 0.0);
        Complex fp = finite_part_ray(alpha, cof.phi, y, 0.0, cfg).value;
        fs[i] = deltas[i] * fp;
      }
      Complex extrap1 = extrapolate_to_zero(deltas, fs);
      double scale1 = std::max(1.0, std::abs(ck));
      add_case(rep,
               "lim1 k=" + std::to_string(k) + " phi=" + cof.name +
                   " extrapolated",
               std::abs(extrap1 - ck) / scale1, 1e-8);
    }
  }

  // g(alpha) == 1 identically for phi = e^{-p}
  for (double al : {2.3, -1.0, -3.0}) {
    Complex g = gamma_normalized_fp(Complex(al, 0.0), plain, y, cfg).value;
    add_case(rep, "identity g(alpha)=1 at alpha=" + std::to_string(al),
             std::abs(g - 1.0), 1e-11);
  }
  return rep;
}

SuiteReport suite_connection_uv(const EvalConfig& cfg) {
  SuiteReport rep;
  rep.suite_id = "connection_uv";
  const Complex a_grid[5] = {Complex(0.0, 0.0), Complex(0.5, 0.0),
                             Complex(-0.5 + 1e-3, 0.0), Complex(1.0, 1.0),
                             Complex(0.0, -0.7)};
  const double z_grid[2] = {1.3, 2.1};

  for (Complex a : a_grid) {
    ConnectionCoefficients m = connection_matrix_uv(a);
    // M(a)^2 = I
    double closure = 0.0;
    closure = std::max(closure,
                       std::abs(m.m11 * m.m11 + m.m12 * m.m21 - 1.0));
    closure = std::max(closure, std::abs(m.m11 * m.m12 + m.m12 * m.m22));
    closure = std::max(closure, std::abs(m.m21 * m.m11 + m.m22 * m.m21));
    closure = std::max(closure,
                       std::abs(m.m21 * m.m12 + m.m22 * m.m22 - 1.0));
    add_case(rep, "M(a)^2=I a=" + fmt(a), closure, 1e-11);
    double det = std::abs(m.m11 * m.m22 - m.m12 * m.m21 + 1.0);
    add_case(rep, "det M = -1 a=" + fmt(a), det, 1e-12);

    for (double zr : z_grid) {
      Complex z(zr, 0.0);
      double h = 0.05 * std::max(1.0, std::abs(z));
      Complex uv = eval_function(FunctionId::U, a, z, cfg);
      Complex vv = eval_function(FunctionId::V, a, z, cfg);
      Complex up = model_derivative(FunctionId::U, a, z, h, cfg);
      Complex vp = model_derivative(FunctionId::V, a, z, h, cfg);
      auto [u_prop, u_prop_d] = propagate_weber(0, a, z, uv, up, -z);
      auto [v_prop, v_prop_d] = propagate_weber(0, a, z, vv, vp, -z);
      (void)u_prop_d;
      (void)v_prop_d;

      Complex u_pred = m.m11 * uv + m.m12 * vv;
      Complex v_pred = m.m21 * uv + m.m22 * vv;
      double du = std::abs(u_prop - u_pred) /
                  std::max(std::abs(u_prop),
                           std::abs(m.m11 * uv) + std::abs(m.m12 * vv));
      double dv = std::abs(v_prop - v_pred) /
                  std::max(std::abs(v_prop),
                           std::abs(m.m21 * uv) + std::abs(m.m22 * vv));
      add_case(rep, "U(a,-z) row a=" + fmt(a) + " z=" + std::to_string(zr),
               du, 1e-9);
      add_case(rep, "V(a,-z) row a=" + fmt(a) + " z=" + std::to_string(zr),
               dv, 1e-9);
    }
  }
  return rep;
}

SuiteReport suite_connection_e(const EvalConfig& cfg) {
  SuiteReport rep;
  rep.suite_id = "connection_e";
  const Complex a_grid[4] = {Complex(0.0, 0.0), Complex(0.3, 0.0),
                             Complex(0.0, 0.5 - 1e-3), Complex(0.4, -0.3)};
  const double x_grid[2] = {1.2, 1.7};

  for (Complex a : a_grid) {
    ConnectionCoefficients m = connection_matrix_e(a);
    double closure = 0.0;
    closure = std::max(closure,
                       std::abs(m.m11 * m.m11 + m.m12 * m.m21 - 1.0));
    closure = std::max(closure, std::abs(m.m11 * m.m12 + m.m12 * m.m22));
    closure = std::max(closure, std::abs(m.m21 * m.m11 + m.m22 * m.m21));
    closure = std::max(closure,
                       std::abs(m.m21 * m.m12 + m.m22 * m.m22 - 1.0));
    add_case(rep, "M(a)^2=I a=" + fmt(a), closure, 1e-11);

    // raw continuation coefficient against the normalized matrix entry:
    // (i e^{pi a} + 1) 2^{ia} e^{-i pi/4} Gamma(1/4+ia/2)/Gamma(1/4-ia/2)
    //   = sqrt(2 pi) e^{pi a/2} / Gamma(1/2-ia)
    Complex lhs = (I * std::exp(pi * a) + 1.0) *
                  std::exp(I * a * std::log(2.0)) *
                  std::exp(-I * (pi / 4.0)) * gamma(0.25 + 0.5 * I * a) /
                  gamma(0.25 - 0.5 * I * a);
    Complex rhs = sqrt_two_pi * std::exp(0.5 * pi * a) *
                  recip_gamma(0.5 - I * a);
    add_case(rep, "raw AC coefficient a=" + fmt(a),
             std::abs(lhs - rhs) / std::abs(rhs), 1e-11);

    for (double xr : x_grid) {
      Complex x(xr, 0.0);
      double h = 0.05 * std::max(1.0, xr);
      auto [ep, em] = e_pair(a, x, cfg);
      Complex epd = model_derivative(FunctionId::Eplus, a, x, h, cfg);
      Complex emd = model_derivative(FunctionId::Eminus, a, x, h, cfg);
      auto [ep_prop, d1] = propagate_weber(1, a, x, ep.value, epd, -x);
      auto [em_prop, d2] = propagate_weber(1, a, x, em.value, emd, -x);
      (void)d1;
      (void)d2;
      Complex em_pred = m.m11 * em.value + m.m12 * ep.value;
      Complex ep_pred = m.m21 * em.value + m.m22 * ep.value;
      double dm = std::abs(em_prop - em_pred) /
                  std::max(std::abs(em_prop), std::abs(em_pred));
      double dp = std::abs(ep_prop - ep_pred) /
                  std::max(std::abs(ep_prop), std::abs(ep_pred));
      add_case(rep, "E-(a,-x) row a=" + fmt(a) + " x=" + std::to_string(xr),
               dm, 1e-9);
      add_case(rep, "E+(a,-x) row a=" + fmt(a) + " x=" + std::to_string(xr),
               dp, 1e-9);

      // classical connection with the analytic phase replacement:
      // E*(a,-x) = -i sqrt(1+e^{2 pi a}) E(a,x) + i e^{pi a} E*(a,x)
      Complex e_v = eval_function(FunctionId::E, a, x, cfg);
      Complex es_v = eval_function(FunctionId::Estar, a, x, cfg);
      Complex es_m = eval_function(FunctionId::Estar, a, -x, cfg);
      Complex epa = std::exp(pi * a);
      Complex pred = -I * std::sqrt(1.0 + epa * epa) * e_v + I * epa * es_v;
      add_case(rep,
               "classical E*(a,-x) a=" + fmt(a) + " x=" + std::to_string(xr),
               std::abs(es_m - pred) / std::abs(pred), 1e-9);
    }
  }
  return rep;
}

SuiteReport suite_eestar(const EvalConfig& cfg) {
  SuiteReport rep;
  rep.suite_id = "eestar";
  const double a_grid[3] = {0.0, 0.5, 0.7};
  const double x_grid[2] = {1.3, 2.0};

  for (double ar : a_grid) {
    Complex a(ar, 0.0);
    ClassicalPhases ph = classical_phases(a);
    add_case(rep, "k(k+2e^{pi a})=1 a=" + std::to_string(ar),
             std::abs(ph.k * (ph.k + 2.0 * std::exp(pi * a)) - 1.0), 1e-12);
    for (double xr : x_grid) {
      Complex x(xr, 0.0);
      Complex e_v = eval_function(FunctionId::E, a, x, cfg);
      Complex es_v = eval_function(FunctionId::Estar, a, x, cfg);
      add_case(rep,
               "E*=conj(E) a=" + std::to_string(ar) + " x=" +
                   std::to_string(xr),
               std::abs(es_v - std::conj(e_v)) / std::abs(e_v), 1e-11);
      // E through the U route (rotated argument), independent machinery
      Complex u_rot = eval_function(FunctionId::U, I * a,
                                    x * std::polar(1.0, -pi / 4.0), cfg);
      Complex e_from_u = std::sqrt(2.0) * std::exp(0.25 * pi * a) *
                         std::exp(I * ph.rho) * u_rot;
      add_case(rep,
               "E via U route a=" + std::to_string(ar) + " x=" +
                   std::to_string(xr),
               std::abs(e_v - e_from_u) / std::abs(e_v), 1e-9);
    }
  }
  // reality of W on the real line
  for (auto [ar, xr] : {std::pair{0.0, 1.0}, std::pair{0.5, 2.0}}) {
    Complex w = eval_function(FunctionId::W, Complex(ar, 0.0),
                              Complex(xr, 0.0), cfg);
    add_case(rep,
             "W real a=" + std::to_string(ar) + " x=" + std::to_string(xr),
             std::fabs(w.imag()) / std::abs(w), 1e-11);
  }
  // |Gamma(1/2+ia)|^2 cosh(pi a) = pi on the real axis
  for (double ar : {-3.0, -1.4, 0.0, 0.9, 2.2, 3.0}) {
    Complex g = gamma(Complex(0.5, ar));
    double lhs = std::norm(g) * std::cosh(pi * ar) / pi;
    add_case(rep, "|Gamma(1/2+ia)|^2 = pi/cosh(pi a) a=" + std::to_string(ar),
             std::fabs(lhs - 1.0), 1e-12);
  }
  return rep;
}

SuiteReport suite_link(const EvalConfig& cfg) {
  SuiteReport rep;
  rep.suite_id = "link";
  for (double ar : {0.0, 0.6}) {
    for (double xr : {1.5, 2.0}) {
      auto [rp, rm] = u_e_link(Complex(ar, 0.0), xr, cfg);
      add_case(rep,
               "U(ia,x e^{-i pi/4}) vs E+ a=" + std::to_string(ar) + " x=" +
                   std::to_string(xr),
               rp, 1e-9);
      add_case(rep,
               "U(-ia,x e^{+i pi/4}) vs E- a=" + std::to_string(ar) + " x=" +
                   std::to_string(xr),
               rm, 1e-9);
      Complex a(ar, 0.0), x(xr, 0.0);
      Complex e_v = eval_function(FunctionId::E, a, x, cfg);
      Complex es_v = eval_function(FunctionId::Estar, a, x, cfg);
      add_case(rep,
               "E*=conj(E) a=" + std::to_string(ar) + " x=" +
                   std::to_string(xr),
               std::abs(es_v - std::conj(e_v)) / std::abs(e_v), 1e-11);
    }
  }
  return rep;
}

SuiteReport suite_asymptotic(const EvalConfig& cfg) {
  SuiteReport rep;
  rep.suite_id = "asymptotic";
  const Complex a_grid[6] = {Complex(0.0, 0.0),  Complex(0.3, 0.0),
                             Complex(-0.5, 0.0), Complex(0.0, 0.8),
                             Complex(0.3, 0.4),  Complex(-0.9, 0.0)};
  const Complex args[2] = {Complex(10.0, 0.0),
                           10.0 * std::polar(1.0, pi / 8.0)};

  for (Complex a : a_grid) {
    for (Complex z : args) {
      {
        int s = optimal_truncation(a, z);
        Complex ref = eval_function(FunctionId::U, a, z, cfg);
        AsymptoticSum su = asym_u(a, z, s);
        add_case(rep, "asymU a=" + fmt(a) + " z=" + fmt(z),
                 std::abs(su.value - ref) / std::abs(ref), 1e-9);
      }
      {
        int s = optimal_truncation(-a, z);
        Complex ref = eval_function(FunctionId::V, a, z, cfg);
        AsymptoticSum sv = asym_v(a, z, s);
        add_case(rep, "asymV a=" + fmt(a) + " z=" + fmt(z),
                 std::abs(sv.value - ref) / std::abs(ref), 1e-9);
      }
      {
        int sp = optimal_truncation(I * a, z);
        auto [ep, em] = e_pair(a, z, cfg);
        AsymptoticSum se = asym_e(a, z, sp, +1);
        add_case(rep, "asymE+ a=" + fmt(a) + " x=" + fmt(z),
                 std::abs(se.value - ep.value) / std::abs(ep.value), 1e-9);
        int sm = optimal_truncation(-I * a, z);
        AsymptoticSum sem = asym_e(a, z, sm, -1);
        add_case(rep, "asymE- a=" + fmt(a) + " x=" + fmt(z),
                 std::abs(sem.value - em.value) / std::abs(em.value), 1e-9);
      }
    }
  }
  return rep;
}

SuiteReport suite_ode(const GridSpec& grid, const EvalConfig& cfg) {
  SuiteReport rep;
  rep.suite_id = "ode";
  std::mt19937_64 rng(grid.seed);
  std::uniform_real_distribution<double> ua(-2.0, 2.0), uz(-3.0, 3.0);
  const FunctionId fns[4] = {FunctionId::U, FunctionId::V, FunctionId::Eplus,
                             FunctionId::Eminus};
  int produced = 0;
  while (produced < grid.ode_cases) {
    Complex a(ua(rng), ua(rng));
    if (std::abs(a) > 2.0) continue;
    Complex z(uz(rng), uz(rng));
    double az = std::abs(z);
    if (az < 0.5 || az > 3.0) continue;
    ++produced;
    double h = 0.05 * std::max(1.0, az);
    for (FunctionId fn : fns) {
      double r = ode_residual(fn, a, z, h, cfg);
      add_case(rep,
               std::string("ode ") + to_string(fn) + " a=" + fmt(a) +
                   " z=" + fmt(z),
               r, 1e-8);
    }
  }
  return rep;
}

SuiteReport suite_wronskian(const EvalConfig& cfg) {
  SuiteReport rep;
  rep.suite_id = "wronskian";
  const Complex a_grid[3] = {Complex(0.0, 0.0), Complex(-0.7, 0.0),
                             Complex(1.0, 0.5)};
  const double z_grid[3] = {0.7, 1.5, 3.0};

  for (Complex a : a_grid) {
    Complex w_vals[3];
    for (int i = 0; i < 3; ++i) {
      Complex z(z_grid[i], 0.0);
      double h = 0.005 * std::max(1.0, z_grid[i]);
      w_vals[i] = wronskian(FunctionId::U, FunctionId::V, a, z, h, cfg);
      add_case(rep,
               "W{U,V}=sqrt(2/pi) a=" + fmt(a) + " z=" +
                   std::to_string(z_grid[i]),
               std::abs(w_vals[i] - sqrt_2_over_pi) / sqrt_2_over_pi, 1e-9);
    }
    double spread = std::max(std::abs(w_vals[0] - w_vals[1]),
                             std::max(std::abs(w_vals[0] - w_vals[2]),
                                      std::abs(w_vals[1] - w_vals[2])));
    add_case(rep, "W{U,V} constant in z a=" + fmt(a),
             spread / sqrt_2_over_pi, 1e-9);

    for (int i = 0; i < 3; ++i) {
      Complex x(z_grid[i], 0.0);
      double h = 0.005 * std::max(1.0, z_grid[i]);
      Complex w = wronskian(FunctionId::Eplus, FunctionId::Eminus, a, x, h,
                            cfg);
      add_case(rep,
               "W{E+,E-}=-i a=" + fmt(a) + " x=" + std::to_string(z_grid[i]),
               std::abs(w - Complex(0.0, -1.0)), 1e-9);
    }
    // antisymmetry
    Complex z(1.5, 0.0);
    Complex ww = wronskian(FunctionId::U, FunctionId::U, a, z, 0.0075, cfg);
    add_case(rep, "W{U,U}=0 a=" + fmt(a), std::abs(ww), 1e-10);
  }
  return rep;
}

} // namespace

SuiteReport run_suite(SuiteId suite, const GridSpec& grid,
                      const EvalConfig& cfg) {
  switch (suite) {
    case SuiteId::lemma: return suite_lemma(cfg);
    case SuiteId::connection_uv: return suite_connection_uv(cfg);
    case SuiteId::connection_e: return suite_connection_e(cfg);
    case SuiteId::eestar: return suite_eestar(cfg);
    case SuiteId::link: return suite_link(cfg);
    case SuiteId::asymptotic: return suite_asymptotic(cfg);
    case SuiteId::ode: return suite_ode(grid, cfg);
    case SuiteId::wronskian: return suite_wronskian(cfg);
    case SuiteId::all: break;
  }
  SuiteReport rep;
  rep.suite_id = "all";
  for (SuiteId s : {SuiteId::lemma, SuiteId::connection_uv,
                    SuiteId::connection_e, SuiteId::eestar, SuiteId::link,
                    SuiteId::asymptotic, SuiteId::ode, SuiteId::wronskian}) {
    SuiteReport sub = run_suite(s, grid, cfg);
    for (auto& c : sub.cases) {
      c.input = sub.suite_id + ": " + c.input;
      rep.worst_residual = std::max(rep.worst_residual, c.residual);
      rep.cases.push_back(std::move(c));
    }
  }
  return rep;
}

} // namespace pcf
