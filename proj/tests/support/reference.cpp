#include "support/reference.hpp"

#include "pcf/gamma.hpp"

#include <cmath>
#include <vector>

namespace reference {

namespace {

// QUADPACK 7-15 Gauss-Kronrod pair on [-1,1]
const double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
const double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
  Complex value;
  double err;
};

PanelResult gk15(const std::function<Complex(double)>& f, double a,
                 double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  Complex fc = f(c);
  Complex kron = wgk[7] * fc;
  Complex gauss = wg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    Complex f1 = f(c - h * xgk[j]);
    Complex f2 = f(c + h * xgk[j]);
    kron += wgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += wg[j / 2] * (f1 + f2);
  }
  kron *= h;
  gauss *= h;
  return {kron, std::abs(kron - gauss)};
}

void adapt(const std::function<Complex(double)>& f, double a, double b,
           double tol, int depth, int force, Complex& acc) {
  if (force <= 0) {
    PanelResult p = gk15(f, a, b);
    // the raw |K-G| difference underestimates the Kronrod error of the
    // K15 value itself; use the QUADPACK-style sharpened estimate
    double err = p.err * std::sqrt(p.err);
    if ((err < tol && p.err < 1e-4) || depth <= 0) {
      acc += p.value;
      return;
    }
  }
  double c = 0.5 * (a + b);
  adapt(f, a, c, 0.6 * tol, depth - 1, force - 1, acc);
  adapt(f, c, b, 0.6 * tol, depth - 1, force - 1, acc);
}

const Complex I(0.0, 1.0);

// Series data of the four Poincare expansions along the positive axis:
// prefactor P(z), its log-derivative L(z) = P'/P, the term recurrence.
struct SeriesSpec {
  Complex pre, logd; // at the anchor
  Complex b, d;      // t_{s+1} = t_s (b+2s)(b+2s+1)/((s+1) d)
};

SeriesSpec series_spec(Kind kind, Complex a, double z) {
  SeriesSpec s;
  double z2 = z * z;
  switch (kind) {
    case Kind::U:
      s.pre = std::exp(Complex(-0.25 * z2, 0.0) +
                       (-a - 0.5) * std::log(z));
      s.logd = -0.5 * z + (-a - 0.5) / z;
      s.b = 0.5 + a;
      s.d = Complex(-2.0 * z2, 0.0);
      break;
    case Kind::V:
      s.pre = pcf::sqrt_2_over_pi *
              std::exp(Complex(0.25 * z2, 0.0) + (a - 0.5) * std::log(z));
      s.logd = 0.5 * z + (a - 0.5) / z;
      s.b = 0.5 - a;
      s.d = Complex(2.0 * z2, 0.0);
      break;
    case Kind::Eplus:
      s.pre = std::exp(0.25 * I * z2 + (-0.5 * I * a - 0.25) *
                                           std::log(Complex(z2, 0.0)));
      s.logd = 0.5 * I * z + (-I * a - 0.5) / z;
      s.b = 0.5 + I * a;
      s.d = 2.0 * I * z2;
      break;
    case Kind::Eminus:
      s.pre = std::exp(-0.25 * I * z2 + (0.5 * I * a - 0.25) *
                                            std::log(Complex(z2, 0.0)));
      s.logd = -0.5 * I * z + (I * a - 0.5) / z;
      s.b = 0.5 - I * a;
      s.d = -2.0 * I * z2;
      break;
  }
  return s;
}

} // namespace

Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                  double abs_tol, int max_depth) {
  Complex acc(0.0, 0.0);
  // always subdivide a few levels; the Kronrod error estimate can be
  // over-optimistic on a single wide panel
  adapt(f, a, b, std::max(abs_tol, 1e-16), std::min(max_depth, 22), 5, acc);
  return acc;
}

std::pair<Complex, Complex> asymptotic_seed(Kind kind, Complex a,
                                            double anchor) {
  SeriesSpec s = series_spec(kind, a, anchor);
  Complex t(1.0, 0.0), sum(0.0, 0.0), dsum(0.0, 0.0);
  double best = std::abs(t);
  // optimally truncated: stop when the terms start growing
  for (int n = 0; n < 400; ++n) {
    sum += t;
    dsum += (-2.0 * n / anchor) * t;
    t *= (s.b + 2.0 * n) * (s.b + 2.0 * n + 1.0) / ((n + 1.0) * s.d);
    double m = std::abs(t);
    if (m > best && n > 2) break;
    best = std::min(best, m);
  }
  Complex w = s.pre * sum;
  Complex wp = s.pre * (s.logd * sum + dsum);
  return {w, wp};
}

Complex ode_oracle(Kind kind, Complex a, Complex target, double anchor) {
  if (kind == Kind::V) {
    // Marching V inward is exponentially unstable (the recessive-at-infinity
    // mode grows like e^{z^2/4 - target^2/4} relative to V and swamps it).
    // Recover V from two stable U marches through the reflection identity
    // V(a,z) = Gamma(1/2+a)/pi * (U(a,-z) + sin(pi a) U(a,z))  [NIST 12.2.15]
    Complex u_neg = ode_oracle(Kind::U, a, -target, anchor);
    Complex u_pos = ode_oracle(Kind::U, a, target, anchor);
    return pcf::gamma(0.5 + a) / pcf::pi *
           (u_neg + pcf::sin_pi(a) * u_pos);
  }
  auto [w, wp] = asymptotic_seed(kind, a, anchor);
  bool e_family = (kind == Kind::Eplus || kind == Kind::Eminus);

  Complex pos(anchor, 0.0);
  Complex span = target - pos;
  double total = std::abs(span);
  if (total == 0.0) return w;
  Complex unit = span / total;
  double done = 0.0;
  const int order = 40;
  std::vector<Complex> c(order + 1);
  while (done < total) {
    Complex q0 = e_family ? a - 0.25 * pos * pos : 0.25 * pos * pos + a;
    Complex q1 = e_family ? -0.5 * pos : 0.5 * pos;
    Complex q2 = e_family ? Complex(-0.25, 0.0) : Complex(0.25, 0.0);
    double step =
        std::min(total - done, 0.9 / std::sqrt(std::abs(q0) + 2.0));
    c.assign(order + 1, Complex(0.0, 0.0));
    c[0] = w;
    c[1] = wp;
    for (int n = 0; n + 2 <= order; ++n) {
      Complex rhs = q0 * c[n];
      if (n >= 1) rhs += q1 * c[n - 1];
      if (n >= 2) rhs += q2 * c[n - 2];
      c[n + 2] = rhs / double((n + 1) * (n + 2));
    }
    Complex u = step * unit, v(0.0, 0.0), dv(0.0, 0.0);
    for (int k = order; k >= 1; --k) {
      v = v * u + c[k];
      dv = dv * u + double(k) * c[k];
    }
    v = v * u + c[0];
    w = v;
    wp = dv;
    pos += u;
    done += step;
  }
  return w;
}

} // namespace reference
