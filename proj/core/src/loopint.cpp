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

#include "wavetail/loopint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavetail/errors.hpp"
#include "wavetail/quadrature.hpp"
#include "wavetail/specfun.hpp"

namespace wavetail::loopint {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;

complexd ipow(complexd w, int k) {
    if (k < 0) return 1.0 / ipow(w, -k);
    complexd r{1.0, 0.0};
    while (k > 0) {
        if (k & 1) r *= w;
        w *= w;
        k >>= 1;
    }
    return r;
}

complexd polar_unit(double angle) {
    return {std::cos(angle), std::sin(angle)};
}

// log(b lambda) on the chosen branches: principal log b plus the contour's
// own arg(lambda) in (-pi/2, 3pi/2).
struct LogOffset {
    double log_abs_b;
    double arg_b;
};

LogOffset log_offset(complexd b) {
    return {std::log(std::abs(b)), std::arg(b)};
}

complexd log_power(double log_abs_lambda, double arg_lambda, const LogOffset& lb, int k) {
    if (k == 0) return {1.0, 0.0};
    complexd w{log_abs_lambda + lb.log_abs_b, arg_lambda + lb.arg_b};
    if (k < 0 && std::abs(w) < 1e-3)
        throw numeric_error("loop integral: log factor vanishes on the contour");
    return ipow(w, k);
}

} // namespace

void ContourSpec::validate(complexd b, int k) const {
    if (!(delta > 0.0)) throw domain_error("ContourSpec: delta must be positive");
    if (variant == Variant::gamma_finite && !(delta < ray_length))
        throw domain_error("ContourSpec: delta must be smaller than the ray length");
    if (k < 0) {
        double bd = std::abs(b) * delta;
        if (bd >= 0.5 && bd <= 2.0)
            throw domain_error(
                "ContourSpec: circle radius too close to the log zero at 1/b "
                "(|b| delta in [1/2, 2] with k < 0)");
    }
}

void ModelIntegralSpec::validate() const {
    if (!(t > 0.0)) throw domain_error("ModelIntegralSpec: t must be positive");
    if (b == complexd(0.0, 0.0)) throw domain_error("ModelIntegralSpec: b must be nonzero");
    if (b.real() == 0.0 && b.imag() > 0.0)
        throw domain_error("ModelIntegralSpec: b must avoid i[0, infinity)");
    if (std::abs(k) > 8) throw domain_error("ModelIntegralSpec: |k| <= 8 supported");
}

complexd TimeTerm::eval(double t) const {
    double lt = std::log(t);
    return coeff * std::pow(t, power) * std::pow(lt, double(logpow));
}

double default_delta(complexd b, double t) {
    double d = std::min(1e-3, 1.0 / t);
    double ab = std::abs(b);
    if (ab > 0.0) d = std::min(d, 1.0 / (4.0 * ab));
    return d;
}

complexd loop_integral_closed(double nu, double t) {
    if (!(t > 0.0)) throw domain_error("loop_integral_closed: t must be positive");
    if (nu >= -0.5 && std::fabs(nu - std::round(nu)) < 1e-12 && std::round(nu) >= 0.0)
        return {0.0, 0.0};
    complexd phase = polar_unit(0.5 * kPi * nu);
    return phase * kTwoPi * specfun::recip_gamma(complexd(-nu, 0.0)) *
           std::pow(t, -nu - 1.0);
}

complexd loop_integral_numeric(const ModelIntegralSpec& spec, const ContourSpec& contour) {
    spec.validate();
    contour.validate(spec.b, spec.k);
    const double nu = spec.nu, t = spec.t, delta = contour.delta;
    const int k = spec.k;
    const LogOffset lb = log_offset(spec.b);

    // Ray truncation for the infinite contour: e^{-t s} s^nu log^k must be
    // below 1e-16 of the running total.  Solve the dominant balance twice.
    double s_upper;
    if (contour.variant == ContourSpec::Variant::gamma_finite) {
        s_upper = contour.ray_length;
    } else {
        double s = (42.0 + std::max(0.0, nu)) / t;
        for (int it = 0; it < 3; ++it) {
            double bulk = 42.0 + std::max(0.0, nu * std::log(std::max(s, 1e-300))) +
                          std::fabs(double(k)) * std::log(2.0 + std::fabs(std::log(s)));
            s = std::max(bulk / t, 4.0 * delta);
        }
        s_upper = s;
    }

    const double arg_left = 1.5 * kPi, arg_right = -0.5 * kPi;

    auto ray_integral = [&](double arg_ray) {
        auto f = [&](double s) -> complexd {
            return std::exp(-t * s) * std::pow(s, nu) *
                   log_power(std::log(s), arg_ray, lb, k);
        };
        // geometric panels from delta outward resolve the s^nu endpoint
        complexd acc{0.0, 0.0};
        double lo = delta;
        while (lo < s_upper) {
            double hi = std::min(lo * 2.0, s_upper);
            complexd seg = quad::integrate(f, lo, hi, 1e-16 * (1.0 + std::abs(acc)), 1e-13);
            acc += seg;
            if (std::abs(seg) < 1e-16 * std::abs(acc) && hi > 8.0 / t && lo > delta * 64.0)
                break;  // exponentially dead tail
            lo = hi;
        }
        return acc;
    };

    // Phase factors absorbed by the ray parametrization lambda = s e^{i arg}:
    // dl = e^{i arg} ds, lambda^nu = s^nu e^{i nu arg}; the incoming ray runs
    // from s_upper down to delta, hence its minus sign.
    complexd bracket_left = -polar_unit(arg_left * (nu + 1.0));
    complexd bracket_right = polar_unit(arg_right * (nu + 1.0));

    complexd rays;
    if (k == 0) {
        complexd shared = ray_integral(0.0);  // log factor is 1, arg unused
        rays = (bracket_left + bracket_right) * shared;
    } else {
        rays = bracket_left * ray_integral(arg_left) + bracket_right * ray_integral(arg_right);
    }

    auto f_circle = [&](double theta) -> complexd {
        complexd lam = delta * polar_unit(theta);
        return std::exp(complexd(0.0, -t) * lam) * std::pow(delta, nu + 1.0) *
               polar_unit(theta * (nu + 1.0)) * log_power(std::log(delta), theta, lb, k) *
               complexd(0.0, 1.0);
    };
    // clockwise over the top: theta from 3pi/2 down to -pi/2, sign folded in
    complexd circle{0.0, 0.0};
    const double thetas[5] = {-0.5 * kPi, 0.0, 0.5 * kPi, kPi, 1.5 * kPi};
    for (int i = 0; i < 4; ++i)
        circle -= quad::integrate(f_circle, thetas[i], thetas[i + 1], 1e-16, 1e-13);

    return rays + circle;
}

complexd loop_integral_numeric(const ModelIntegralSpec& spec) {
    return loop_integral_numeric(spec, ContourSpec::infinite(default_delta(spec.b, spec.t)));
}

double binom_general(int k, int m) {
    if (m < 0) throw domain_error("binom_general: m must be >= 0");
    double r = 1.0;
    for (int i = 0; i < m; ++i) r *= double(k - i) / double(i + 1);
    return r;
}

complexd hankel_loop_factor(double nu) {
    return loop_integral_closed(nu, 1.0);
}

std::vector<complexd> hankel_loop_factor_derivatives(double nu, int count) {
    if (count < 0 || count > 6)
        throw domain_error("hankel_loop_factor_derivatives: count in [0, 6]");
    // F(nu) = 2 pi e^{i pi nu/2} / Gamma(-nu).  Factor the reciprocal gamma
    // as P(nu) / Gamma(n - nu) with n chosen so the remaining Gamma argument
    // stays >= 1; then every factor is smooth at this nu and the
    // log-derivative chain of 1/Gamma(n - nu) is plain polygamma.
    int n = std::max(0, int(std::ceil(nu + 1.0 - 1e-12)));
    double w = double(n) - nu;

    // P(nu) = prod_{i=0}^{n-1} (i - nu) as a coefficient vector in x = nu
    std::vector<double> pc = {1.0};
    for (int i = 0; i < n; ++i) {
        std::vector<double> next(pc.size() + 1, 0.0);
        for (size_t j = 0; j < pc.size(); ++j) {
            next[j] += pc[j] * double(i);
            next[j + 1] -= pc[j];
        }
        pc = std::move(next);
    }
    std::vector<complexd> P(count + 1, complexd{0.0, 0.0});
    for (int d = 0; d <= count; ++d) {
        double acc = 0.0, xp = 1.0;
        for (size_t j = d; j < pc.size(); ++j) {
            double perm = 1.0;
            for (int q = 0; q < d; ++q) perm *= double(j - q);
            acc += pc[j] * perm * xp;
            xp *= nu;
        }
        P[d] = acc;
    }

    // V(nu) = 1/Gamma(n - nu); dV/dnu = V * psi(n - nu), and
    // d^j/dnu^j psi(n - nu) = (-1)^j psi^{(j)}(n - nu).
    std::vector<complexd> psi_d(count + 1);
    for (int j = 0; j <= count; ++j) {
        double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        psi_d[j] = sgn * specfun::polygamma(j, complexd(w, 0.0));
    }
    std::vector<complexd> V(count + 1);
    V[0] = specfun::recip_gamma(complexd(w, 0.0));
    for (int j = 0; j < count; ++j) {
        complexd acc{0.0, 0.0};
        for (int i = 0; i <= j; ++i)
            acc += binom_general(j, i) * V[i] * psi_d[j - i];
        V[j + 1] = acc;
    }

    // G = P * V by Leibniz, then F = 2 pi A G with A = e^{i pi nu / 2}.
    std::vector<complexd> G(count + 1);
    for (int d = 0; d <= count; ++d) {
        complexd acc{0.0, 0.0};
        for (int i = 0; i <= d; ++i)
            acc += binom_general(d, i) * P[i] * V[d - i];
        G[d] = acc;
    }
    complexd A = polar_unit(0.5 * kPi * nu);
    complexd ihalfpi{0.0, 0.5 * kPi};
    std::vector<complexd> F(count + 1);
    for (int d = 0; d <= count; ++d) {
        complexd acc{0.0, 0.0};
        complexd apow{1.0, 0.0};
        for (int i = 0; i <= d; ++i) {
            acc += binom_general(d, i) * apow * G[d - i];
            apow *= ihalfpi;
        }
        F[d] = kTwoPi * A * acc;
    }
    return F;
}

complexd asym_coeff(double nu, int k, complexd b, int m) {
    if (m < 0 || m > 6) throw domain_error("asym_coeff: m must be in [0, 6]");
    double bin = binom_general(k, m);
    if (bin == 0.0) return {0.0, 0.0};
    double sign = (std::abs(k - m) % 2 == 0) ? 1.0 : -1.0;

    // closed route: expand log^m(b mu) in powers of log b and nu-derivatives
    complexd logb = std::log(b);
    std::vector<complexd> F = hankel_loop_factor_derivatives(nu, m);
    complexd integral{0.0, 0.0};
    for (int i = 0; i <= m; ++i)
        integral += binom_general(m, i) * ipow(logb, m - i) * F[i];
    complexd closed = sign * bin * integral;

    // numeric route: the same mu-integral over gamma(delta, infinity) at t = 1
    ModelIntegralSpec spec{nu, m, b, 1.0};
    complexd numeric = sign * bin * loop_integral_numeric(spec);

    if (std::abs(closed - numeric) > 1e-7 * (1.0 + std::abs(closed)))
        throw crosscheck_error(
            "asym_coeff: polygamma route and quadrature route disagree: " +
            std::to_string(closed.real()) + "+" + std::to_string(closed.imag()) +
            "i vs " + std::to_string(numeric.real()) + "+" +
            std::to_string(numeric.imag()) + "i");
    return closed;
}

complexd TimeExpansion::eval(double t) const {
    complexd acc{0.0, 0.0};
    for (const auto& term : terms) acc += term.eval(t);
    return acc;
}

double TimeExpansion::remainder_scale(double t) const {
    return std::pow(t, remainder_power) * std::pow(std::log(t), double(remainder_logpow));
}

TimeExpansion time_expansion(const ModelIntegralSpec& spec, int M) {
    if (M < 0 || M > 6) throw domain_error("time_expansion: M must be in [0, 6]");
    spec.validate();
    TimeExpansion out;
    out.terms.reserve(M + 1);
    for (int m = 0; m <= M; ++m) {
        complexd c = asym_coeff(spec.nu, spec.k, spec.b, m);
        out.terms.push_back({c, -spec.nu - 1.0, spec.k - m});
    }
    out.remainder_power = -spec.nu - 1.0;
    out.remainder_logpow = spec.k - M - 1;
    return out;
}

complexd frak_J(complexd b, double t) {
    if (std::abs(std::arg(b) + 0.5 * kPi) > 1e-9)
        throw domain_error("frak_J: requires arg b = -pi/2");
    if (!(t > 1.0)) throw domain_error("frak_J: requires t > 1");
    ModelIntegralSpec spec{-2.0, -1, b, t};
    return loop_integral_numeric(spec) / kTwoPi;
}

complexd log_time_integral(double t) {
    if (!(t > 0.0)) throw domain_error("log_time_integral: t must be positive");
    ModelIntegralSpec spec{0.0, 1, complexd{1.0, 0.0}, t};
    double delta = default_delta(spec.b, t);
    complexd v = loop_integral_numeric(spec, ContourSpec::finite(delta, 1.0));
    if (t >= 10.0) {
        double defect = std::abs(v + kTwoPi / t);
        if (defect > 50.0 * std::exp(-0.5 * t))
            throw crosscheck_error("log_time_integral: -2 pi / t law violated, defect " +
                                   std::to_string(defect));
    }
    return v;
}

} // namespace wavetail::loopint
