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
#include <vector>

namespace wavetail::loopint {

using complexd = std::complex<double>;

// Keyhole contour around the negative imaginary half-axis: come in along
// arg(lambda) = 3pi/2 from distance `ray_length` (or infinity), circle the
// origin clockwise at radius `delta` from angle 3pi/2 down to -pi/2 passing
// over the top, and leave along arg(lambda) = -pi/2.  The logarithm branch
// is arg(lambda) in (-pi/2, 3pi/2).
struct ContourSpec {
    enum class Variant { gamma_finite, gamma_infinite };

    double delta = 1e-3;
    double ray_length = 1.0;  // ignored for gamma_infinite
    Variant variant = Variant::gamma_infinite;

    static ContourSpec finite(double delta, double ray_length) {
        return {delta, ray_length, Variant::gamma_finite};
    }
    static ContourSpec infinite(double delta) {
        return {delta, 0.0, Variant::gamma_infinite};
    }

    /// Checks the contour against the integrand parameters: delta > 0,
    /// delta < ray_length for the finite variant, and for k < 0 the zero of
    /// log(b lambda) at lambda = 1/b must stay well off the circle
    /// (|b| delta outside [1/2, 2]).
    void validate(complexd b, int k) const;
};

// One model integrand e^{-i t lambda} lambda^nu log^k(b lambda).
// b must avoid i[0, infinity); log b takes its principal value.
struct ModelIntegralSpec {
    double nu = 0.0;
    int k = 0;
    complexd b{1.0, 0.0};
    double t = 1.0;

    void validate() const;
};

// One long-time term coeff * t^power * log(t)^logpow.
struct TimeTerm {
    complexd coeff{0.0, 0.0};
    double power = 0.0;
    int logpow = 0;

    complexd eval(double t) const;
};

/// Default keyhole radius: keeps the circle well conditioned, 1/b off the
/// contour, and the circle contribution O(1) at time t.
double default_delta(complexd b, double t);

/// Closed form of the Hankel loop integral over gamma(delta, infinity) with
/// k = 0:  e^{i pi nu / 2} * (2 pi / Gamma(-nu)) * t^{-nu-1}.
/// Exactly zero for nu in {0, 1, 2, ...}.
complexd loop_integral_closed(double nu, double t);

/// Numerical evaluation of the contour integral for general (nu, k, b, t).
complexd loop_integral_numeric(const ModelIntegralSpec& spec, const ContourSpec& contour);
complexd loop_integral_numeric(const ModelIntegralSpec& spec);  // infinite contour, default delta

/// Generalized binomial coefficient binom(k, m) for integer k (any sign)
/// and integer m >= 0.
double binom_general(int k, int m);

/// The entire function F(nu) = e^{i pi nu/2} 2 pi / Gamma(-nu): the loop
/// integral at t = 1, together with its first `count` nu-derivatives.
/// Derivatives come from the product rule on a pole-free factorization,
/// with the log-derivative chain built from polygamma values.
complexd hankel_loop_factor(double nu);
std::vector<complexd> hankel_loop_factor_derivatives(double nu, int count);

/// Asymptotic coefficient c_{nu,k,m}.  Computed in closed form through
/// hankel_loop_factor_derivatives and cross-checked internally against the
/// numerical mu-integral at t = 1; throws wavetail::crosscheck_error if the
/// two routes disagree beyond 1e-7 * (1 + |value|).  Requires 0 <= m <= 6.
complexd asym_coeff(double nu, int k, complexd b, int m);

// Truncated long-time expansion of the loop integral: terms
// c_{nu,k,m} t^{-nu-1} log^{k-m} t for m = 0..M plus the order of the
// dropped remainder, O(t^{-nu-1} log^{k-M-1} t).
struct TimeExpansion {
    std::vector<TimeTerm> terms;
    double remainder_power = 0.0;  // exponent of t in the remainder bound
    int remainder_logpow = 0;      // exponent of log t in the remainder bound

    complexd eval(double t) const;
    double remainder_scale(double t) const;  // t^power * log^logpow t
};

TimeExpansion time_expansion(const ModelIntegralSpec& spec, int M);

/// (1/2pi) * loop integral for nu = -2, k = -1 over gamma(delta, infinity);
/// requires arg b = -pi/2 and t > 1.  Behaves like t/log t for large t.
complexd frak_J(complexd b, double t);

/// lim_delta integral over gamma(delta, c) of e^{-i t lambda} log(lambda);
/// equals -2 pi / t up to an exponentially small error, which is verified
/// internally for t >= 10.
complexd log_time_integral(double t);

} // namespace wavetail::loopint
