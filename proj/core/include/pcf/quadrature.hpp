#ifndef PCF_QUADRATURE_HPP
#define PCF_QUADRATURE_HPP

#include "pcf/series.hpp"
#include "pcf/types.hpp"

#include <functional>

namespace pcf {

// Endpoint-singular Laplace integrand p^{alpha-1} psi(p). Branch data for
// the algebraic factors of psi lives in its BranchFactor records.
struct IntegrandSpec {
  Complex alpha;
  AnalyticCofactor psi;
};

// Integration ray e^{i theta} R_+. `truncation` != 0 pins the tail cutoff;
// 0 selects it from the decay rate automatically.
struct RayPath {
  double theta = 0.0;
  double truncation = 0.0;
};

// Integrand on the unit interval with algebraic endpoint behavior
// t^{alpha0-1} (1-t)^{alpha1-1} smooth(t, 1-t). The engine folds the power
// factors into the node weights in log space, so it stays stable for very
// small endpoint exponents; `smooth` must be analytic on [0,1] and receives
// both t and 1-t to avoid cancellation near the endpoints.
struct UnitIntegrand {
  Complex alpha0{1.0, 0.0};
  Complex alpha1{1.0, 0.0};
  std::function<Complex(double t, double omt)> smooth;
};

struct QuadOutcome {
  Complex value{0.0, 0.0};
  double abs_err = 0.0;
  int levels = 0;
  bool converged = false;
};

// Double-exponential (tanh-sinh) quadrature of a UnitIntegrand over (0,1).
QuadOutcome tanh_sinh_unit(const UnitIntegrand& f, double rel_tol,
                           double abs_tol, int max_level);

// int_0^{R_tail e^{i theta}} e^{-p y} p^{alpha-1} psi(p) dp plus an analytic
// bound on the dropped tail. Preconditions: Re alpha > 0 and
// Re(y e^{i theta}) > 0; the ray must stay clear of every branch point of
// psi (angular distance >= 1e-8).
EvalResult laplace_ray(const IntegrandSpec& spec, Complex y,
                       const RayPath& path, const EvalConfig& cfg);

// Segment integral between two algebraic endpoint singularities:
//   int_{z0}^{z1} (p-z0)^{alpha0-1} (z1-p)^{alpha1-1} psi(p-z0) e^{-p y} dp
// where arg(p-z0) = arg(z1-p) = arg(z1-z0) along the segment. spec0 holds
// alpha0 and psi as a function of p-z0; spec1 holds alpha1 and the cofactor
// re-expanded at z1 (consulted by the finite-part layer, not here). Both
// Re alpha must be positive.
EvalResult segment_singular(const IntegrandSpec& spec0,
                            const IntegrandSpec& spec1, Complex y,
                            std::pair<Complex, Complex> endpoints,
                            const EvalConfig& cfg);

// Minimal angular distance between two ray directions.
double angular_distance(double a, double b);

// Tail cutoff for integrands ~ t^{net_power} e^{-decay t}. `growth_power`
// bounds the algebraic envelope in the exponential regime (sum of the
// positive Re exponents); when net_power < -1 the algebraic convergence
// alone may allow an earlier cutoff, whichever is reached first.
double ray_truncation(double decay, double growth_power, double net_power,
                      double tol);

// int_{r0}^{r1} f(t) dt for f smooth on [r0, r1], 0 < r0 < r1. Wide ranges
// (r1/r0 large) are integrated in log coordinates so that algebraic decay
// becomes exponential.
QuadOutcome integrate_band(const std::function<Complex(double)>& f,
                           double r0, double r1, double rel_tol,
                           double abs_tol, int max_level);

} // namespace pcf

#endif
