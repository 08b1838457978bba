// Independent reference machinery for the test suites. Everything here
// deliberately avoids the library's tanh-sinh/finite-part code paths:
// integrals go through adaptive Gauss-Kronrod and function values through
// asymptotics-seeded Taylor marching of the defining ODEs.
#ifndef PCF_TESTS_REFERENCE_HPP
#define PCF_TESTS_REFERENCE_HPP

#include "pcf/types.hpp"

#include <functional>

namespace reference {

using pcf::Complex;

// Adaptive Gauss7/Kronrod15 over a real interval; the integrand must be
// smooth (map singular endpoints away with a power substitution first).
Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                  double abs_tol = 1e-14, int max_depth = 40);

enum class Kind { U, V, Eplus, Eminus };

// Value of the function at `target` obtained by evaluating the optimally
// truncated large-argument series (value and derivative) at anchor >= 10 on
// the positive real axis and marching the Weber ODE inward with high-order
// Taylor steps. Accurate to ~1e-12 relative for moderate |target|.
Complex ode_oracle(Kind kind, Complex a, Complex target,
                   double anchor = 12.0);

// Series value and derivative at real anchor (optimal truncation).
std::pair<Complex, Complex> asymptotic_seed(Kind kind, Complex a,
                                            double anchor);

} // namespace reference

#endif
