#ifndef PCF_SERIES_HPP
#define PCF_SERIES_HPP

#include "pcf/types.hpp"

#include <vector>

namespace pcf {

// Truncated Maclaurin series with its guaranteed radius of validity.
struct TaylorSeries {
  std::vector<Complex> coeff;
  double radius = 0.0;

  int order() const { return int(coeff.size()) - 1; }
  Complex eval(Complex u) const; // Horner partial sum
};

// One algebraic branch-point factor (1 + c u)^beta. `winding` counts full
// turns added to the principal argument of (1 + c u); off-principal sheets
// appear when an integration path is rotated past the cut.
struct BranchFactor {
  Complex c;
  Complex beta;
  int winding = 0;
};

// scale * exp(rate * u) * prod_j (1 + c_j u)^{beta_j}
//
// This is the analytic-cofactor shape shared by every Laplace integrand in
// the library: it can be evaluated pointwise on a path and expanded at the
// endpoint u = 0 to any order (binomial recurrence and Cauchy products, no
// numerical differentiation).
struct AnalyticCofactor {
  Complex scale{1.0, 0.0};
  Complex rate{0.0, 0.0};
  std::vector<BranchFactor> factors;

  Complex value(Complex u) const;
  // Distance from u = 0 to the nearest branch point (infinity if none).
  double radius() const;
  // Coefficients up to u^order at u = 0.
  TaylorSeries taylor(int order) const;
  // Reparametrize u = e^{i theta} t; returns the cofactor in t.
  AnalyticCofactor rotated(double theta) const;
  // Multiply by exp(r u).
  AnalyticCofactor with_exp(Complex r) const;
};

// (1 + c u)^beta on the given branch sheet.
Complex branch_pow(Complex c, Complex beta, int winding, Complex u);

} // namespace pcf

#endif
