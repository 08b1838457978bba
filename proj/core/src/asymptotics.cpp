#include "pcf/asymptotics.hpp"

#include <cmath>
#include <limits>

namespace pcf {

namespace {

const Complex I(0.0, 1.0);

void require_sector(Complex z, double half_width, const char* who) {
  if (z == Complex(0.0, 0.0) ||
      std::fabs(std::arg(z)) >= half_width)
    throw Error(ErrorCode::domain,
                std::string(who) + ": argument outside the valid sector");
}

// sum_{s<=S} t_s with t_0 = 1, t_{s+1} = t_s (b+2s)(b+2s+1) / ((s+1) d);
// all three series here have this shape.
AsymptoticSum sum_terms(Complex b, Complex d, int terms, Complex prefactor) {
  AsymptoticSum out;
  Complex t(1.0, 0.0), sum(0.0, 0.0);
  int s = 0;
  for (; s <= terms; ++s) {
    sum += t;
    t *= (b + 2.0 * s) * (b + 2.0 * s + 1.0) / ((s + 1.0) * d);
  }
  out.value = prefactor * sum;
  out.terms_used = s;
  out.last_term_magnitude = std::abs(prefactor * t);
  return out;
}

} // namespace

AsymptoticSum asym_u(Complex a, Complex z, int terms) {
  require_sector(z, 0.75 * pi, "asym_u");
  Complex z2 = z * z;
  Complex pre = std::exp(-0.25 * z2 + (-a - 0.5) * std::log(z));
  return sum_terms(0.5 + a, -2.0 * z2, terms, pre);
}

AsymptoticSum asym_v(Complex a, Complex z, int terms) {
  require_sector(z, 0.25 * pi, "asym_v");
  Complex z2 = z * z;
  Complex pre =
      sqrt_2_over_pi * std::exp(0.25 * z2 + (a - 0.5) * std::log(z));
  return sum_terms(0.5 - a, 2.0 * z2, terms, pre);
}

AsymptoticSum asym_e(Complex a, Complex x, int terms, int sign) {
  require_sector(x, 0.25 * pi, "asym_e");
  if (sign != 1 && sign != -1)
    throw Error(ErrorCode::usage, "asym_e: sign must be +-1");
  Complex s2 = x * x;
  Complex ia = I * a;
  Complex pre, b, d;
  if (sign > 0) {
    pre = std::exp(0.25 * I * s2 + (-0.5 * ia - 0.25) * std::log(s2));
    b = 0.5 + ia;
    d = 2.0 * I * s2;
  } else {
    pre = std::exp(-0.25 * I * s2 + (0.5 * ia - 0.25) * std::log(s2));
    b = 0.5 - ia;
    d = -2.0 * I * s2;
  }
  return sum_terms(b, d, terms, pre);
}

int optimal_truncation(Complex a, Complex z) {
  if (z == Complex(0.0, 0.0))
    throw Error(ErrorCode::domain, "optimal_truncation: z must be nonzero");
  Complex z2 = z * z, b = 0.5 + a, d = -2.0 * z2;
  Complex t(1.0, 0.0); // t_0
  double best = std::numeric_limits<double>::infinity();
  int best_s = 0;
  for (int s = 0; s <= 200; ++s) {
    t *= (b + 2.0 * s) * (b + 2.0 * s + 1.0) / ((s + 1.0) * d); // t_{s+1}
    if (std::abs(t) < best) {
      best = std::abs(t); // next-term magnitude when truncating at S = s
      best_s = s;
    }
  }
  return best_s;
}

} // namespace pcf
