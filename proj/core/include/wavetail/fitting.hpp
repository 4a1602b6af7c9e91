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
#include <span>
#include <utility>
#include <vector>

namespace wavetail::harness {

using complexd = std::complex<double>;

enum class FitFamily { pure_power, power_log };

// Fitted decay law |v(t)| ~ |constant| * t^{-power} * log(t)^{logpow}.
struct RateFit {
    double power = 0.0;
    int logpow = 0;
    complexd constant{0.0, 0.0};
    double residual = 0.0;  // RMS defect of the fit in log-log coordinates

    double eval_magnitude(double t) const;
};

/// Least squares of log|value| against -power*log t (+ logpow*log log t for
/// the power_log family; the log exponent scans the integers [-3, 1] and the
/// best residual wins).  Requires >= 8 samples with nonzero values spanning
/// close to a decade (ratio >= 8); throws degenerate_samples_error otherwise.
RateFit fit_rate(std::span<const std::pair<double, complexd>> samples, FitFamily family);

} // namespace wavetail::harness
