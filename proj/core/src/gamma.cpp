#include "pcf/gamma.hpp"

#include <cmath>

namespace pcf {

namespace {

// Lanczos coefficients for g = 607/128, n = 15 (Godfrey's set). Relative
// accuracy of Gamma is ~1e-15 on Re z >= 1/2.
constexpr double lanczos_g = 607.0 / 128.0;
constexpr double lanczos_c[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double log_sqrt_two_pi = 0.91893853320467274178032973640562;

// log Gamma on Re z >= 1/2 via Lanczos. The series sum has positive real
// part there, so the principal log of each piece is the analytic branch.
Complex log_gamma_right(Complex z) {
  Complex sum(lanczos_c[0], 0.0);
  for (int k = 1; k < 15; ++k) sum += lanczos_c[k] / (z + double(k - 1));
  Complex base = z + (lanczos_g - 0.5);
  return (z - 0.5) * std::log(base) - base + log_sqrt_two_pi + std::log(sum);
}

// log sin(pi z), analytically continued from the real interval (0,1).
// For Im z >= 0:  sin(pi z) = e^{-i pi z} (e^{2 pi i z} - 1) / (2i), and
// 1 - e^{2 pi i z} stays in the right half plane, so the principal log1p
// term never crosses a cut. Lower half plane by conjugation.
Complex log_sin_pi(Complex z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  Complex i_pi(0.0, pi);
  Complex w = std::exp(2.0 * i_pi * z); // |w| <= 1 for Im z >= 0
  return -i_pi * z + Complex(0.0, 0.5 * pi) - std::log(2.0) +
         std::log(1.0 - w);
}

} // namespace

Complex sin_pi(Complex z) {
  double n = std::round(z.real());
  Complex f = z - n; // |Re f| <= 1/2, exact
  Complex s = std::sin(pi * f);
  // sin(pi (n+f)) = cos(pi n) sin(pi f) = (-1)^n sin(pi f)
  bool odd = std::fmod(std::fabs(n), 2.0) == 1.0;
  return odd ? -s : s;
}

Complex cos_pi(Complex z) {
  double n = std::round(z.real());
  Complex f = z - n;
  Complex c = std::cos(pi * f);
  bool odd = std::fmod(std::fabs(n), 2.0) == 1.0;
  return odd ? -c : c;
}

double dist_to_nonpositive_integer(Complex z) {
  double k = std::round(z.real());
  if (k > 0.0) k = 0.0;
  return std::abs(z - k);
}

Complex log_gamma(Complex z) {
  if (dist_to_nonpositive_integer(z) < 1e-14)
    throw Error(ErrorCode::gamma_pole,
                "log_gamma: argument at a pole of Gamma");
  if (z.real() >= 0.5) return log_gamma_right(z);
  // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z).
  return std::log(pi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex recip_gamma(Complex z) {
  if (z.real() >= 0.5) return std::exp(-log_gamma_right(z));
  // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi; sin_pi vanishes exactly at
  // the non-positive integers.
  return sin_pi(z) * std::exp(log_gamma_right(1.0 - z)) / pi;
}

Complex pochhammer(Complex x, int n) {
  Complex p(1.0, 0.0);
  for (int k = 0; k < n; ++k) p *= x + double(k);
  return p;
}

} // namespace pcf
