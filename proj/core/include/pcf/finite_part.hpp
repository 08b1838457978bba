#ifndef PCF_FINITE_PART_HPP
#define PCF_FINITE_PART_HPP

#include "pcf/quadrature.hpp"
#include "pcf/series.hpp"
#include "pcf/types.hpp"

namespace pcf {

// Entire building block of the gamma-normalized finite part:
//
//   moment_coefficient(alpha, n, R) = R^{n+alpha} / ((n+alpha) Gamma(alpha))
//                                   = R^{n+alpha} prod_{j<n}(alpha+j) / Gamma(alpha+n+1)
//
// The product form (entire in alpha) is used within 1e-3 of a non-positive
// integer, where the direct form would cancel catastrophically. At
// alpha = -n exactly the value is R^0 (-1)^n n! / Gamma(1) = (-1)^n n!.
Complex moment_coefficient(Complex alpha, int n, double R);

// Hadamard finite part of int_0^R p^{alpha-1} phi(p) dp for phi analytic on
// a disk of radius > R, given by its Maclaurin coefficients:
//
//   fp int_0^R p^{alpha-1} phi(p) dp = sum_n phi_n R^{n+alpha} / (n+alpha)
//
// Coefficients up to the configured series order enter term by term; the
// remaining terms are the exact term-wise integral of the subtracted Taylor
// tail, summed until the geometric bound falls below tolerance. Equals the
// ordinary integral whenever Re alpha > 0.
//
// Throws Error(fp_pole) within 1e-12 of alpha in {0,-1,-2,...} (a simple
// pole of the finite part; the gamma-normalized form below is the entire
// object to use there) and Error(series_truncation) if the supplied
// coefficients cannot resolve the tolerance at R.
Complex finite_part_segment(Complex alpha, const TaylorSeries& phi, double R,
                            const EvalConfig& cfg);

// g(alpha) = (1/Gamma(alpha)) fp int_0^\infty p^{alpha-1} phi(p) e^{-p y} dp,
// entire in alpha. The exponential is folded into the Taylor data of phi by
// a Cauchy product; the head [0,R] becomes a sum of moment coefficients and
// the tail [R,inf) an ordinary convergent integral times 1/Gamma(alpha).
// At alpha = -k this reproduces (-1)^k phi~^(k)(0) exactly (phi~ = folded
// cofactor), which is the removable-singularity limit.
//
// Requires Re y > 0.
EvalResult gamma_normalized_fp(Complex alpha, const AnalyticCofactor& phi,
                               Complex y, const EvalConfig& cfg);

// Same object with the contour rotated to the ray e^{i theta} R_+:
//   g(alpha) = e^{i alpha theta} (1/Gamma(alpha)) fp int_0^inf t^{alpha-1}
//              phi(t e^{i theta}) e^{-t y e^{i theta}} dt
// which is the analytic continuation of the theta = 0 value whenever the
// rotation sweeps no branch point of phi. Requires Re(y e^{i theta}) > 0.
EvalResult gamma_normalized_fp_ray(Complex alpha, const AnalyticCofactor& phi,
                                   Complex y, double theta,
                                   const EvalConfig& cfg);

// Un-normalized finite part over the full ray, split at R:
//   fp int_0^inf = fp int_0^R (series) + int_R^inf (quadrature).
// Used where a formula needs the raw finite part rather than g(alpha).
EvalResult finite_part_ray(Complex alpha, const AnalyticCofactor& phi,
                           Complex y, double theta, const EvalConfig& cfg);

// Building blocks shared with the Weber evaluators.

// Taylor data of a folded cofactor, long enough that |c_n R^n| has decayed
// to roundoff below the largest term. Throws Error(series_truncation).
TaylorSeries folded_taylor(const AnalyticCofactor& folded, double R,
                           const EvalConfig& cfg);

// Head sums over [0,R] with a roundoff bound: the gamma-normalized form
// sum_n c_n moment_coefficient(alpha,n,R) (entire in alpha) and the raw
// form sum_n c_n R^{n+alpha}/(n+alpha).
std::pair<Complex, double> fp_head_moments(Complex alpha,
                                           const TaylorSeries& ts, double R);
std::pair<Complex, double> fp_head_raw(Complex alpha, const TaylorSeries& ts,
                                       double R);

} // namespace pcf

#endif
