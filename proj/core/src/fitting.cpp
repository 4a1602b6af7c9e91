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

#include "wavetail/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wavetail/errors.hpp"

namespace wavetail::harness {

double RateFit::eval_magnitude(double t) const {
    return std::abs(constant) * std::pow(t, -power) *
           std::pow(std::log(t), double(logpow));
}

namespace {

struct LineFit {
    double intercept, slope, rms;
};

// least squares y = intercept + slope * x
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    double n = double(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double det = n * sxx - sx * sx;
    double slope = (n * sxy - sx * sy) / det;
    double intercept = (sy - slope * sx) / n;
    double rss = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        double d = y[i] - intercept - slope * x[i];
        rss += d * d;
    }
    return {intercept, slope, std::sqrt(rss / n)};
}

} // namespace

RateFit fit_rate(std::span<const std::pair<double, complexd>> samples, FitFamily family) {
    if (samples.size() < 8)
        throw degenerate_samples_error("fit_rate: need at least 8 samples");
    double tmin = std::numeric_limits<double>::infinity(), tmax = 0.0;
    for (const auto& [t, v] : samples) {
        if (!(t > 0.0)) throw degenerate_samples_error("fit_rate: t must be positive");
        if (std::abs(v) == 0.0)
            throw degenerate_samples_error("fit_rate: zero sample value");
        tmin = std::min(tmin, t);
        tmax = std::max(tmax, t);
    }
    if (tmax / tmin < 8.0)
        throw degenerate_samples_error("fit_rate: samples must span about a decade");
    if (family == FitFamily::power_log && tmin <= 1.05)
        throw degenerate_samples_error("fit_rate: power_log requires t > 1");

    std::vector<double> x, y, llt;
    x.reserve(samples.size());
    y.reserve(samples.size());
    llt.reserve(samples.size());
    for (const auto& [t, v] : samples) {
        x.push_back(std::log(t));
        y.push_back(std::log(std::abs(v)));
        llt.push_back(family == FitFamily::power_log ? std::log(std::log(t)) : 0.0);
    }

    RateFit best;
    double best_rms = std::numeric_limits<double>::infinity();
    const int q_lo = (family == FitFamily::power_log) ? -3 : 0;
    const int q_hi = (family == FitFamily::power_log) ? 1 : 0;
    for (int q = q_lo; q <= q_hi; ++q) {
        std::vector<double> yq(y.size());
        for (size_t i = 0; i < y.size(); ++i) yq[i] = y[i] - q * llt[i];
        LineFit lf = fit_line(x, yq);
        if (lf.rms < best_rms) {
            best_rms = lf.rms;
            best.power = -lf.slope;
            best.logpow = q;
            best.residual = lf.rms;
            best.constant = std::exp(lf.intercept);
        }
    }
    // complex constant: mean of v * t^power * log^{-logpow} t preserves phase
    complexd cacc{0.0, 0.0};
    for (const auto& [t, v] : samples)
        cacc += v * std::pow(t, best.power) * std::pow(std::log(t), double(-best.logpow));
    best.constant = cacc / double(samples.size());
    return best;
}

} // namespace wavetail::harness
