#ifndef PCF_TYPES_HPP
#define PCF_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace pcf {

using Complex = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline const double sqrt_pi = std::sqrt(pi);
inline const double sqrt_two_pi = std::sqrt(2.0 * pi);
inline const double sqrt_2_over_pi = std::sqrt(2.0 / pi);

// Error taxonomy used across the library. Evaluators throw; they never
// return NaN or infinity silently.
enum class ErrorCode {
  gamma_pole,        // log_gamma at a non-positive integer
  fp_pole,           // finite part requested exactly at an exponent pole
  nonconvergent_ray, // Re(y e^{i theta}) <= 0, Laplace integral diverges
  singular_ray,      // integration ray runs into a branch point
  domain,            // argument outside the continuable/valid region
  series_truncation, // Taylor tail bound exceeds the requested tolerance
  quadrature,        // adaptive refinement hit its level cap
  stencil,           // finite-difference stencil leaves the evaluable region
  usage,             // malformed request (CLI layer)
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

// Per-call numerical policy. Immutable while an evaluation runs.
struct EvalConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;     // absolute floor; effectively relative control
  double split_radius = 0.25;  // series/quadrature split for finite parts
  int series_order = 40;       // guaranteed head order of Taylor data
  int max_quad_level = 12;     // tanh-sinh refinement cap
};

// Which evaluation route produced a value.
enum PathFlag : unsigned {
  path_direct = 1u << 0,      // plain convergent quadrature
  path_finite_part = 1u << 1, // Hadamard finite part regularization
  path_limit = 1u << 2,       // removable singularity, limit formula
  path_connection = 1u << 3,  // connection formula applied
  path_medianized = 1u << 4,  // balanced two-sided Laplace average
};
using PathFlags = unsigned;

struct EvalResult {
  Complex value{0.0, 0.0};
  double abs_err = 0.0;
  PathFlags flags = 0;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace pcf

#endif
