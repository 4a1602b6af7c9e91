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

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "wavetail/errors.hpp"

namespace wavetail::quad {

using complexd = std::complex<double>;

// 16-point Gauss-Legendre rule on [-1, 1]; nodes/weights for the positive
// half, mirrored at evaluation time.
inline constexpr std::array<double, 8> kGL16Nodes = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542,
};
inline constexpr std::array<double, 8> kGL16Weights = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806,
};

inline double magnitude(double v) { return std::fabs(v); }
inline double magnitude(complexd v) { return std::abs(v); }

template <class F>
auto gl16(const F& f, double a, double b) {
    using R = std::invoke_result_t<F, double>;
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    R acc{};
    for (int i = 0; i < 8; ++i) {
        double dx = half * kGL16Nodes[i];
        acc += kGL16Weights[i] * (f(mid + dx) + f(mid - dx));
    }
    return half * acc;
}

namespace detail {

template <class F, class R>
R adapt(const F& f, double a, double b, R whole, double abs_tol, double rel_tol,
        int depth, int max_depth) {
    double mid = 0.5 * (a + b);
    R left = gl16(f, a, mid);
    R right = gl16(f, mid, b);
    R refined = left + right;
    double err = magnitude(refined - whole);
    if (err <= abs_tol || err <= rel_tol * magnitude(refined)) return refined;
    if (depth >= max_depth)
        throw budget_error("adaptive quadrature: refinement budget exhausted, residual " +
                           std::to_string(err));
    return adapt(f, a, mid, left, 0.5 * abs_tol, rel_tol, depth + 1, max_depth) +
           adapt(f, mid, b, right, 0.5 * abs_tol, rel_tol, depth + 1, max_depth);
}

} // namespace detail

/// Adaptive Gauss-Legendre integration of a smooth (piecewise-smooth)
/// integrand on [a, b].  Bisects until the local GL16 vs 2x GL16 defect is
/// below tolerance; throws wavetail::budget_error past max_depth levels.
template <class F>
auto integrate(const F& f, double a, double b, double abs_tol = 1e-13,
               double rel_tol = 1e-12, int max_depth = 28) {
    using R = std::invoke_result_t<F, double>;
    if (a == b) return R{};
    R whole = gl16(f, a, b);
    return detail::adapt(f, a, b, whole, abs_tol, rel_tol, 0, max_depth);
}

/// Same, but with interior breakpoints (integrand kinks, oscillation panels).
template <class F>
auto integrate_panels(const F& f, const std::vector<double>& breaks,
                      double abs_tol = 1e-13, double rel_tol = 1e-12,
                      int max_depth = 28) {
    using R = std::invoke_result_t<F, double>;
    R acc{};
    for (size_t i = 0; i + 1 < breaks.size(); ++i)
        acc += integrate(f, breaks[i], breaks[i + 1], abs_tol, rel_tol, max_depth);
    return acc;
}

/// Breakpoints for an oscillatory integrand on [a, b]: about `per_cycle`
/// panels per oscillation of wavenumber `k`, at least `min_panels`.
std::vector<double> oscillation_breaks(double a, double b, double k,
                                       int min_panels = 4, int per_cycle = 3,
                                       int max_panels = 20000);

} // namespace wavetail::quad
