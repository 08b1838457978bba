#include "pcf/series.hpp"

#include <cmath>
#include <limits>

namespace pcf {

Complex TaylorSeries::eval(Complex u) const {
  Complex s(0.0, 0.0);
  for (std::size_t k = coeff.size(); k-- > 0;) s = s * u + coeff[k];
  return s;
}

Complex branch_pow(Complex c, Complex beta, int winding, Complex u) {
  Complex base = 1.0 + c * u;
  double arg = std::arg(base) + 2.0 * pi * winding;
  Complex log_base(std::log(std::abs(base)), arg);
  return std::exp(beta * log_base);
}

Complex AnalyticCofactor::value(Complex u) const {
  Complex v = scale * std::exp(rate * u);
  for (const auto& f : factors) v *= branch_pow(f.c, f.beta, f.winding, u);
  return v;
}

double AnalyticCofactor::radius() const {
  double r = std::numeric_limits<double>::infinity();
  for (const auto& f : factors) {
    double ac = std::abs(f.c);
    if (ac > 0.0) r = std::min(r, 1.0 / ac);
  }
  return r;
}

TaylorSeries AnalyticCofactor::taylor(int order) const {
  std::vector<Complex> acc(order + 1, Complex(0.0, 0.0));
  acc[0] = scale;
  std::vector<Complex> fac(order + 1);
  for (const auto& f : factors) {
    // binomial recurrence for (1 + c u)^beta on the sheet `winding`:
    // the sheet only contributes the constant phase e^{2 pi i beta w}
    fac.assign(order + 1, Complex(0.0, 0.0));
    fac[0] = std::exp(f.beta * Complex(0.0, 2.0 * pi * f.winding));
    for (int n = 0; n < order; ++n)
      fac[n + 1] = fac[n] * f.c * (f.beta - double(n)) / double(n + 1);
    std::vector<Complex> out(order + 1, Complex(0.0, 0.0));
    for (int n = 0; n <= order; ++n) {
      if (acc[n] == Complex(0.0, 0.0)) continue;
      for (int m = 0; n + m <= order; ++m) out[n + m] += acc[n] * fac[m];
    }
    acc.swap(out);
  }
  if (rate != Complex(0.0, 0.0)) {
    fac.assign(order + 1, Complex(0.0, 0.0));
    fac[0] = 1.0;
    for (int n = 0; n < order; ++n) fac[n + 1] = fac[n] * rate / double(n + 1);
    std::vector<Complex> out(order + 1, Complex(0.0, 0.0));
    for (int n = 0; n <= order; ++n) {
      if (acc[n] == Complex(0.0, 0.0)) continue;
      for (int m = 0; n + m <= order; ++m) out[n + m] += acc[n] * fac[m];
    }
    acc.swap(out);
  }
  return TaylorSeries{std::move(acc), radius()};
}

AnalyticCofactor AnalyticCofactor::rotated(double theta) const {
  AnalyticCofactor out = *this;
  Complex ph = std::polar(1.0, theta);
  out.rate = rate * ph;
  for (auto& f : out.factors) f.c = f.c * ph;
  return out;
}

AnalyticCofactor AnalyticCofactor::with_exp(Complex r) const {
  AnalyticCofactor out = *this;
  out.rate += r;
  return out;
}

} // namespace pcf
