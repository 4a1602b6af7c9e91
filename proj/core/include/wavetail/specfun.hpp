/*
 * Copyright 2026 The wavetail authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <complex>

namespace wavetail::specfun {

using complexd = std::complex<double>;

// Supported ranges.  The Bessel routines are tuned for these and refuse
// anything outside them rather than degrade silently.
inline constexpr double kMaxOrder = 200.0;
inline constexpr double kMaxArgument = 1.0e5;

/// Gamma function.  Throws wavetail::domain_error at nonpositive integers.
/// Relative accuracy <= 1e-12 for |z| <= 50 away from the poles.
complexd gamma(complexd z);
double gamma(double x);

/// log Gamma on the right half plane Re z > 0 (principal value).
complexd log_gamma(complexd z);
double log_gamma(double x);

/// 1/Gamma, entire; exactly 0 at nonpositive integers.
complexd recip_gamma(complexd z);
double recip_gamma(double x);

/// m-th derivative of log Gamma (digamma for m = 0).  0 <= m <= 6.
complexd polygamma(int m, complexd z);
double polygamma(int m, double x);

/// Bessel functions of the first and second kind, real order nu in
/// [0, 200], real argument x in (0, 1e5].  J is accurate to ~1e-10
/// relative away from zeros and ~1e-12 absolute near them; same
/// contract for Y where the value is representable.
double bessel_j(double nu, double x);
double bessel_y(double nu, double x);

/// d/dx J_nu(x), from the standard derivative recurrence.
double bessel_j_derivative(double nu, double x);
double bessel_y_derivative(double nu, double x);

/// Analytic continuations off the positive real axis.  Principal branch;
/// intended for |arg z| bounded away from pi.
complexd bessel_j(double nu, complexd z);
complexd bessel_y(double nu, complexd z);

/// Hankel function H^(1)_nu(z) = J_nu(z) + i Y_nu(z), continued off the
/// real axis.  Requires z != 0 with arg z in (-pi/4, pi).  For |z| < 42 the
/// J + iY combination cancels like e^{-2 Im z}, so relative accuracy
/// degrades as e^{2 Im z} * 1e-16; large |z| uses a direct expansion free
/// of that cancellation.
complexd hankel1(double nu, complexd z);

namespace detail {
// Internal evaluation routes, exposed so the tests can cross-check one
// route against another on overlapping domains.
complexd bessel_j_series(double nu, complexd z);
complexd bessel_y_series(double nu, complexd z);
void bessel_jy_asymptotic(double nu, double x, double& j, double& y);
void bessel_jy_asymptotic(double nu, complexd z, complexd& j, complexd& y);
complexd hankel1_asymptotic(double nu, complexd z);
double bessel_j_miller(double nu, double x);
complexd bessel_j_miller(double nu, complexd z);
} // namespace detail

} // namespace wavetail::specfun
