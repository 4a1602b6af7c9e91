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

#include "wavetail/models.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "wavetail/errors.hpp"
#include "wavetail/quadrature.hpp"
#include "wavetail/specfun.hpp"

namespace wavetail::models {

namespace sf = wavetail::specfun;
namespace sp = wavetail::spectral;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

void check_lambda(complexd lambda) {
    if (lambda == complexd(0.0, 0.0))
        throw domain_error("resolvent_apply: lambda must be nonzero");
    double a = std::arg(lambda);
    if (!(a > -0.25 * kPi && a < kPi))
        throw domain_error("resolvent_apply: arg lambda must lie in (-pi/4, pi)");
}

bool near_integer(double x, double tol = 1e-9) {
    return std::fabs(x - std::round(x)) < tol;
}

// int f(r) w(r) dr over the support
template <class W>
double profile_integral(const sp::RadialProfile& f, W&& w) {
    return quad::integrate([&](double r) { return f(r) * w(r); }, f.support_lo(),
                           f.support_hi(), 1e-14, 1e-12);
}

double profile_moment(const sp::RadialProfile& f, double power) {
    return profile_integral(f, [power](double r) { return std::pow(r, power); });
}

// Radial mode resolvent (pi i / 2) int J_nu(lambda min) H1_nu(lambda max) f r dr.
complexd radial_mode_resolvent(double nu, complexd lambda, const sp::RadialProfile& f,
                               double r) {
    double lo = f.support_lo(), hi = f.support_hi();
    double split = std::clamp(r, lo, hi);
    double k_osc = std::abs(lambda);
    complexd inner{0.0, 0.0}, outer{0.0, 0.0};
    if (split > lo) {
        auto breaks = quad::oscillation_breaks(lo, split, k_osc);
        inner = quad::integrate_panels(
            [&](double rr) -> complexd {
                return sf::bessel_j(nu, lambda * rr) * f(rr) * rr;
            },
            breaks, 1e-14, 1e-12);
    }
    if (split < hi) {
        auto breaks = quad::oscillation_breaks(split, hi, k_osc);
        outer = quad::integrate_panels(
            [&](double rr) -> complexd {
                return sf::hankel1(nu, lambda * rr) * f(rr) * rr;
            },
            breaks, 1e-14, 1e-12);
    }
    complexd half_pi_i{0.0, 0.5 * kPi};
    return half_pi_i * (sf::hankel1(nu, lambda * r) * inner +
                        sf::bessel_j(nu, lambda * r) * outer);
}

// Leading weight of the lambda^{2 nu} family of a fractional-order mode:
// i pi (1 + i cot(pi nu)) r^nu / (2^{1+2nu} Gamma(1+nu)^2) * int rt^{1+nu} f.
complexd fractional_leading_radial(double nu, const sp::RadialProfile& f, double r) {
    complexd pref{0.0, kPi};  // i pi
    complexd cot{1.0, std::cos(kPi * nu) / std::sin(kPi * nu)};
    double denom = std::pow(2.0, 1.0 + 2.0 * nu) * std::pow(sf::gamma(1.0 + nu), 2);
    return pref * cot * std::pow(r, nu) / denom * profile_moment(f, 1.0 + nu);
}

// Next weight of the same family (lambda^{2nu+2}):
// same prefactor * (-1/(4(nu+1))) * int (rt^2 + r^2) rt^{1+nu} f.
complexd fractional_second_radial(double nu, const sp::RadialProfile& f, double r) {
    complexd pref{0.0, kPi};
    complexd cot{1.0, std::cos(kPi * nu) / std::sin(kPi * nu)};
    double denom = std::pow(2.0, 1.0 + 2.0 * nu) * std::pow(sf::gamma(1.0 + nu), 2);
    double mom = profile_moment(f, 3.0 + nu) + r * r * profile_moment(f, 1.0 + nu);
    return pref * cot * std::pow(r, nu) / denom * (-mom / (4.0 * (nu + 1.0)));
}

// Analytic (integer-power) family of a fractional-order mode; these carry no
// long-time contribution but belong to the low-order term list.
double even_leading_radial(double nu, const sp::RadialProfile& f, double r) {
    return profile_integral(f, [&](double rr) {
        double a = std::min(r, rr), c = std::max(r, rr);
        return std::pow(a / c, nu) / (2.0 * nu) * rr;
    });
}

double even_second_radial(double nu, const sp::RadialProfile& f, double r) {
    return profile_integral(f, [&](double rr) {
        double a = std::min(r, rr), c = std::max(r, rr);
        double corr = -a * a / (4.0 * (1.0 + nu)) - c * c / (4.0 * (1.0 - nu));
        return std::pow(a / c, nu) / (2.0 * nu) * corr * rr;
    });
}

// Integer-order mode (order n): the resolvent kernel carries
// -log(lambda) J_n(lambda a) J_n(lambda c) plus an analytic part, so the
// k = 1 weights are minus the J J Taylor coefficients.
complexd integer_log_leading_radial(int n, const sp::RadialProfile& f, double r) {
    double fac = 1.0;
    for (int i = 2; i <= n; ++i) fac *= i;
    double scale = std::pow(r, n) / (std::pow(4.0, n) * fac * fac);
    return {-scale * profile_moment(f, 1.0 + n), 0.0};
}

complexd integer_log_second_radial(int n, const sp::RadialProfile& f, double r) {
    double fac = 1.0;
    for (int i = 2; i <= n; ++i) fac *= i;
    double scale = std::pow(r, n) / (std::pow(4.0, n) * fac * fac);
    double mom = profile_moment(f, 3.0 + n) + r * r * profile_moment(f, 1.0 + n);
    return {scale * mom / (4.0 * (n + 1.0)), 0.0};
}

// lambda^0 analytic coefficient of an order-0 mode.
complexd integer_even_leading_radial(const sp::RadialProfile& f, double r) {
    complexd acc = profile_integral(f, [&](double rr) {
        double c = std::max(r, rr);
        return (-kEulerGamma - std::log(0.5 * c)) * rr;
    });
    return acc + complexd(0.0, 0.5 * kPi) * profile_moment(f, 1.0);
}

void sort_terms(std::vector<expansion::ResolventTerm>& terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.nu != b.nu) return a.nu < b.nu;
        return a.k < b.k;
    });
}

} // namespace

void CutoffWindow::validate() const {
    if (!(r_max > 0.0)) throw domain_error("CutoffWindow: r_max must be positive");
    for (const auto& p : points)
        if (!(p.r > 0.0) || p.r > r_max)
            throw domain_error("CutoffWindow: points must satisfy 0 < r <= r_max");
}

// ---------------------------------------------------------------------------
// ConeModel
// ---------------------------------------------------------------------------

ConeModel::ConeModel(double alpha, std::vector<ModeData> data)
    : alpha_(alpha), data_(std::move(data)) {
    if (!(alpha_ > 0.0)) throw domain_error("ConeModel: alpha must be positive");
    std::set<int> seen;
    for (const auto& md : data_) {
        if (md.index < 1) throw domain_error("ConeModel: mode indices start at 1");
        if (!seen.insert(md.index).second)
            throw domain_error("ConeModel: duplicate mode index");
        // quantitative non-resonance guard standing in for the Diophantine
        // hypothesis: retained orders must stay off the integers
        double order = alpha_ * md.index;
        if (std::fabs(order - std::round(order)) <= 1e-3)
            throw domain_error("ConeModel: alpha * j within 1e-3 of an integer");
    }
}

double ConeModel::opening() const { return kPi / alpha_; }

complexd ConeModel::resolvent_apply(complexd lambda, double r, double y) const {
    check_lambda(lambda);
    if (!(r > 0.0) || !(y >= 0.0) || y > opening())
        throw domain_error("ConeModel: (r, y) must lie in the sector");
    complexd acc{0.0, 0.0};
    for (const auto& md : data_) {
        double nu = alpha_ * md.index;
        acc += radial_mode_resolvent(nu, lambda, md.profile, r) *
               std::sin(alpha_ * md.index * y);
    }
    return acc;
}

complexd ConeModel::mode_leading_weight(int j, double r, double y) const {
    for (const auto& md : data_)
        if (md.index == j)
            return fractional_leading_radial(alpha_ * j, md.profile, r) *
                   std::sin(alpha_ * j * y);
    return {0.0, 0.0};
}

double ConeModel::leading_constant() const {
    for (const auto& md : data_) {
        if (md.index != 1) continue;
        double L = opening();
        double c1 = 2.0 * sf::gamma(0.5 + alpha_) * std::cos(kPi * alpha_) /
                    (std::pow(kPi, 1.5) * sf::gamma(alpha_));
        // sector integral of f sin(alpha y) rt^{1+alpha}; the angular overlap
        // of sin(alpha j y) with sin(alpha y) keeps only j = 1, weight L/2
        return c1 * 0.5 * L * profile_moment(md.profile, 1.0 + alpha_);
    }
    return 0.0;
}

sp::SpectralProfile& ConeModel::mode_profile(int j) {
    auto it = profiles_.find(j);
    if (it != profiles_.end()) return *it->second;
    for (const auto& md : data_) {
        if (md.index != j) continue;
        auto prof = std::make_unique<sp::SpectralProfile>(
            sp::hankel_transform(alpha_ * j, md.profile));
        return *profiles_.emplace(j, std::move(prof)).first->second;
    }
    throw domain_error("ConeModel: no data for requested mode");
}

double ConeModel::wave_oracle(double t, double r, double y) {
    if (!(t >= 0.0)) throw domain_error("ConeModel: t >= 0 required");
    double acc = 0.0;
    for (const auto& md : data_) {
        double nu = alpha_ * md.index;
        double s = std::sin(alpha_ * md.index * y);
        if (s == 0.0) continue;
        acc += s * sp::sine_evolution(nu, mode_profile(md.index), t, r);
    }
    return acc;
}

ModelTerms ConeModel::terms(double r, double y) const {
    ModelTerms out;
    double nu_min_dropped = 4.0;  // integer family keeps lambda^0, lambda^2
    for (const auto& md : data_) {
        double nu = alpha_ * md.index;
        double s = std::sin(alpha_ * md.index * y);
        out.terms.push_back({2.0 * nu, 0, {1.0, 0.0},
                             fractional_leading_radial(nu, md.profile, r) * s});
        out.terms.push_back({2.0 * nu + 2.0, 0, {1.0, 0.0},
                             fractional_second_radial(nu, md.profile, r) * s});
        out.terms.push_back(
            {0.0, 0, {1.0, 0.0}, even_leading_radial(nu, md.profile, r) * s});
        out.terms.push_back(
            {2.0, 0, {1.0, 0.0}, even_second_radial(nu, md.profile, r) * s});
        nu_min_dropped = std::min(nu_min_dropped, 2.0 * nu + 4.0);
    }
    sort_terms(out.terms);
    out.truncation = expansion::truncation_order(nu_min_dropped, 0);
    return out;
}

// ---------------------------------------------------------------------------
// ABModel
// ---------------------------------------------------------------------------

ABModel::ABModel(double beta, std::vector<ModeData> data)
    : beta_(beta), data_(std::move(data)) {
    std::set<int> seen;
    for (const auto& md : data_)
        if (!seen.insert(md.index).second)
            throw domain_error("ABModel: duplicate mode index");
}

ABModel::FluxClass ABModel::flux_class() const {
    if (near_integer(beta_)) return FluxClass::integer;
    if (near_integer(2.0 * beta_)) return FluxClass::half_odd;
    return FluxClass::generic;
}

double ABModel::mu_min() const {
    double fl = std::floor(beta_);
    return std::min(beta_ - fl, 1.0 + fl - beta_);
}

double ABModel::mu_max() const {
    double fl = std::floor(beta_);
    return std::max(beta_ - fl, 1.0 + fl - beta_);
}

double ABModel::order(int m) const { return std::fabs(double(m) - beta_); }

complexd ABModel::resolvent_apply(complexd lambda, double r, double theta) const {
    check_lambda(lambda);
    if (!(r > 0.0)) throw domain_error("ABModel: r must be positive");
    complexd acc{0.0, 0.0};
    for (const auto& md : data_) {
        complexd phase = std::polar(1.0, md.index * theta);
        acc += radial_mode_resolvent(order(md.index), lambda, md.profile, r) * phase;
    }
    return acc;
}

sp::SpectralProfile& ABModel::mode_profile(int m) {
    auto it = profiles_.find(m);
    if (it != profiles_.end()) return *it->second;
    for (const auto& md : data_) {
        if (md.index != m) continue;
        auto prof = std::make_unique<sp::SpectralProfile>(
            sp::hankel_transform(order(m), md.profile));
        return *profiles_.emplace(m, std::move(prof)).first->second;
    }
    throw domain_error("ABModel: no data for requested mode");
}

complexd ABModel::wave_oracle(double t, double r, double theta) {
    if (!(t >= 0.0)) throw domain_error("ABModel: t >= 0 required");
    complexd acc{0.0, 0.0};
    for (const auto& md : data_) {
        complexd phase = std::polar(1.0, md.index * theta);
        acc += phase * sp::sine_evolution(order(md.index), mode_profile(md.index), t, r);
    }
    return acc;
}

ModelTerms ABModel::terms(double r, double theta) const {
    ModelTerms out;
    double nu_min_dropped = 4.0;
    for (const auto& md : data_) {
        double nu = order(md.index);
        complexd phase = std::polar(1.0, md.index * theta);
        if (near_integer(nu)) {
            int n = int(std::lround(nu));
            out.terms.push_back({2.0 * n, 1, {1.0, 0.0},
                                 integer_log_leading_radial(n, md.profile, r) * phase});
            out.terms.push_back({2.0 * n + 2.0, 1, {1.0, 0.0},
                                 integer_log_second_radial(n, md.profile, r) * phase});
            if (n == 0)
                out.terms.push_back({0.0, 0, {1.0, 0.0},
                                     integer_even_leading_radial(md.profile, r) * phase});
            nu_min_dropped = std::min(nu_min_dropped, 2.0 * n + 4.0);
        } else {
            out.terms.push_back({2.0 * nu, 0, {1.0, 0.0},
                                 fractional_leading_radial(nu, md.profile, r) * phase});
            out.terms.push_back({2.0 * nu + 2.0, 0, {1.0, 0.0},
                                 fractional_second_radial(nu, md.profile, r) * phase});
            // the lambda^{4 nu} interaction slot of the general flux
            // expansion: present in the exponent lattice, weight zero for a
            // single pole
            out.terms.push_back({4.0 * nu, 0, {1.0, 0.0}, {0.0, 0.0}});
            out.terms.push_back(
                {0.0, 0, {1.0, 0.0}, even_leading_radial(nu, md.profile, r) * phase});
            out.terms.push_back(
                {2.0, 0, {1.0, 0.0}, even_second_radial(nu, md.profile, r) * phase});
            nu_min_dropped = std::min(nu_min_dropped, 2.0 * nu + 4.0);
        }
    }
    sort_terms(out.terms);
    out.truncation = expansion::truncation_order(nu_min_dropped, 1);
    return out;
}

std::vector<expansion::ResolventTerm> ABModel::integer_flux_structural_terms() {
    return {{0.0, -1, {1.0, 0.0}, {1.0, 0.0}}};
}

// ---------------------------------------------------------------------------
// FreePlaneModel
// ---------------------------------------------------------------------------

FreePlaneModel::FreePlaneModel(std::vector<ModeData> data)
    : inner_(0.0, std::move(data)) {}

const std::vector<ModeData>& FreePlaneModel::data() const { return inner_.data(); }

complexd FreePlaneModel::resolvent_apply(complexd lambda, double r, double theta) const {
    return inner_.resolvent_apply(lambda, r, theta);
}

complexd FreePlaneModel::wave_oracle(double t, double r, double theta) {
    return inner_.wave_oracle(t, r, theta);
}

ModelTerms FreePlaneModel::terms(double r, double theta) const {
    return inner_.terms(r, theta);
}

complexd FreePlaneModel::log_coefficient_fit(double r, double theta) const {
    // two-point fit of R(lambda) against c0 + L log(lambda); the omitted
    // corrections are O(lambda^2 log lambda)
    double l1 = 1e-3, l2 = 2e-3;
    complexd v1 = resolvent_apply({l1, 0.0}, r, theta);
    complexd v2 = resolvent_apply({l2, 0.0}, r, theta);
    return (v2 - v1) / (std::log(l2) - std::log(l1));
}

} // namespace wavetail::models
