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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "wavetail/errors.hpp"
#include "wavetail/loopint.hpp"
#include "wavetail/specfun.hpp"

using namespace wavetail;
namespace li = wavetail::loopint;
namespace sf = wavetail::specfun;
using complexd = std::complex<double>;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

complexd numeric_infinite(double nu, int k, complexd b, double t) {
    li::ModelIntegralSpec spec{nu, k, b, t};
    return li::loop_integral_numeric(spec);
}
} // namespace

TEST_CASE("residue table for k = 0") {
    // (1/2pi) * integral over gamma(delta, c): -t, -i, 0, 0, 0 for nu = -2..2
    for (double t : {1.0, 5.0, 20.0}) {
        auto contour = li::ContourSpec::finite(li::default_delta({1.0, 0.0}, t), 1.0);
        complexd want[5] = {{-t, 0.0}, {0.0, -1.0}, {}, {}, {}};
        for (int i = 0; i < 5; ++i) {
            double nu = -2.0 + i;
            li::ModelIntegralSpec spec{nu, 0, {1.0, 0.0}, t};
            complexd got = li::loop_integral_numeric(spec, contour) / kTwoPi;
            CHECK(std::abs(got - want[i]) < 1e-8);
        }
    }
}

TEST_CASE("closed form examples") {
    // nu = -2: e^{-i pi} 2 pi / Gamma(2) * t = -2 pi t
    CHECK(std::abs(li::loop_integral_closed(-2.0, 3.0) - complexd(-kTwoPi * 3.0, 0.0)) < 1e-12);
    // nu in N_0: zero
    CHECK(li::loop_integral_closed(0.0, 1.0) == complexd(0.0, 0.0));
    CHECK(li::loop_integral_closed(2.0, 10.0) == complexd(0.0, 0.0));
    // nu = -1/2 at t = 1: 2 sqrt(pi) e^{-i pi/4}
    complexd want = 2.0 * std::sqrt(kPi) * std::polar(1.0, -kPi / 4.0);
    CHECK(std::abs(li::loop_integral_closed(-0.5, 1.0) - want) < 1e-12);
}

TEST_CASE("reflection equivalence of the two closed forms") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> unu(-2.5, 3.0);
    int done = 0;
    while (done < 60) {
        double nu = unu(rng);
        if (std::fabs(nu - std::round(nu)) < 0.05) continue;
        complexd a = -2.0 * std::polar(1.0, 0.5 * kPi * nu) * std::sin(kPi * nu) *
                     sf::gamma(complexd(nu + 1.0, 0.0));
        complexd b = std::polar(1.0, 0.5 * kPi * nu) * kTwoPi *
                     sf::recip_gamma(complexd(-nu, 0.0));
        CHECK(std::abs(a - b) <= 1e-10 * std::abs(b));
        ++done;
    }
}

TEST_CASE("numeric agrees with closed form for k = 0") {
    std::mt19937 rng(20260810);
    std::uniform_real_distribution<double> unu(-2.5, 3.0), ut(0.5, 50.0);
    int done = 0;
    while (done < 50) {
        double nu = unu(rng);
        if (nu > -0.02 && std::fabs(nu - std::round(nu)) < 0.02) continue;  // off N_0
        double t = ut(rng);
        complexd got = numeric_infinite(nu, 0, {1.0, 0.0}, t);
        complexd want = li::loop_integral_closed(nu, t);
        CHECK(std::abs(got - want) <= 1e-8 * std::abs(want));
        ++done;
    }
}

TEST_CASE("delta independence") {
    struct Case {
        double nu;
        int k;
        complexd b;
        double t;
    } cases[] = {
        {-2.0, -1, {0.0, -1.0}, 30.0},
        {0.0, 1, {1.0, 0.0}, 4.0},
        {0.6, 2, {2.0, 2.0}, 11.0},
        {-0.5, 0, {1.0, 0.0}, 2.0},
        {-1.3, -2, {0.5, -0.5}, 8.0},
    };
    for (const auto& c : cases) {
        li::ModelIntegralSpec spec{c.nu, c.k, c.b, c.t};
        double d0 = li::default_delta(c.b, c.t);
        complexd v1 = li::loop_integral_numeric(spec, li::ContourSpec::infinite(d0));
        complexd v2 = li::loop_integral_numeric(spec, li::ContourSpec::infinite(0.5 * d0));
        CHECK(std::abs(v1 - v2) <= 1e-10 * (std::abs(v1) + 1e-30));
    }
}

TEST_CASE("finite and infinite contours differ by an exponentially small tail") {
    const double nu = 0.3, c = 1.0;
    auto diff_at = [&](double t) {
        li::ModelIntegralSpec spec{nu, 0, {1.0, 0.0}, t};
        double d = li::default_delta(spec.b, t);
        complexd fin = li::loop_integral_numeric(spec, li::ContourSpec::finite(d, c));
        complexd inf = li::loop_integral_numeric(spec, li::ContourSpec::infinite(d));
        return std::abs(fin - inf);
    };
    double C = diff_at(5.0) / std::exp(-0.5 * 5.0);
    for (double t = 5.0; t <= 50.0; t += 7.5)
        CHECK(diff_at(t) <= C * std::exp(-0.5 * t) * (1.0 + 1e-6) + 1e-13);
    // fitted decay exponent over the range where the tail is well resolved
    std::vector<double> ts, lg;
    for (double t = 5.0; t <= 15.0; t += 2.0) {
        ts.push_back(t);
        lg.push_back(std::log(diff_at(t)));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < ts.size(); ++i) {
        sx += ts[i];
        sy += lg[i];
        sxx += ts[i] * ts[i];
        sxy += ts[i] * lg[i];
    }
    double n = double(ts.size());
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(-slope >= 0.4);
}

TEST_CASE("c_{0,-1,1} equals 2 pi for several branch constants") {
    for (complexd b : {complexd(1.0, 0.0), std::polar(1.0, -kPi / 2.0),
                       2.0 * std::polar(1.0, kPi / 4.0)}) {
        complexd c = li::asym_coeff(0.0, -1, b, 1);
        CHECK(std::abs(c - complexd(kTwoPi, 0.0)) < 1e-8);
    }
}

TEST_CASE("c_{nu,k,0} vanishes for nu in N_0") {
    for (double nu : {0.0, 1.0, 2.0, 3.0}) {
        for (int k : {-2, -1, 1, 2}) {
            complexd c = li::asym_coeff(nu, k, {1.3, -0.4}, 0);
            CHECK(std::abs(c) < 1e-10);
        }
    }
}

TEST_CASE("m = 0 coefficient reduces to the closed-form factor") {
    // c_{-1/2, 2, 0} = binom(2,0) * F(-1/2) = 2 sqrt(pi) e^{-i pi/4}
    complexd want = 2.0 * std::sqrt(kPi) * std::polar(1.0, -kPi / 4.0);
    complexd got = li::asym_coeff(-0.5, 2, {1.0, 0.0}, 0);
    CHECK(std::abs(got - want) < 1e-10);
}

TEST_CASE("dual-route agreement over the coefficient matrix") {
    // asym_coeff cross-checks internally (throws on disagreement); the matrix
    // here is the acceptance matrix with a generic branch constant
    complexd b = 1.3 * std::polar(1.0, -kPi / 3.0);
    for (double nu : {-2.0, -1.0, 0.0, 0.6}) {
        for (int k : {-2, -1, 1, 2}) {
            for (int m = 0; m <= 3; ++m) {
                CHECK_NOTHROW(li::asym_coeff(nu, k, b, m));
            }
        }
    }
}

TEST_CASE("hankel loop factor derivatives match finite differences") {
    for (double nu : {-2.0, -1.0, 0.0, 0.37, 1.6}) {
        auto F = li::hankel_loop_factor_derivatives(nu, 3);
        const double h = 1e-5;
        for (int d = 1; d <= 3; ++d) {
            auto Fp = li::hankel_loop_factor_derivatives(nu + h, d - 1);
            auto Fm = li::hankel_loop_factor_derivatives(nu - h, d - 1);
            complexd fd = (Fp[d - 1] - Fm[d - 1]) / (2.0 * h);
            CHECK(std::abs(fd - F[d]) < 2e-4 * (1.0 + std::abs(F[d])));
        }
    }
}

TEST_CASE("time expansion of the 1/log integrand") {
    li::ModelIntegralSpec spec{0.0, -1, {1.0, 0.0}, 1.0};
    auto exp1 = li::time_expansion(spec, 1);
    REQUIRE(exp1.terms.size() == 2);
    // m = 0 term vanishes (nu = 0 in N_0); leading surviving term is
    // 2 pi t^{-1} log^{-2} t
    CHECK(std::abs(exp1.terms[0].coeff) < 1e-10);
    CHECK(std::abs(exp1.terms[1].coeff - complexd(kTwoPi, 0.0)) < 1e-8);
    CHECK(exp1.terms[1].power == -1.0);
    CHECK(exp1.terms[1].logpow == -2);  // k - m = -1 - 1
    CHECK(exp1.remainder_power == -1.0);
    CHECK(exp1.remainder_logpow == -3);
}

TEST_CASE("k = 0 expansion has a single term") {
    double alpha = 0.75;
    li::ModelIntegralSpec spec{2.0 * alpha, 0, {1.0, 0.0}, 1.0};
    auto e = li::time_expansion(spec, 0);
    REQUIRE(e.terms.size() == 1);
    complexd F = li::hankel_loop_factor(2.0 * alpha);
    CHECK(std::abs(e.terms[0].coeff - F) < 1e-10 * std::abs(F));
    CHECK(e.terms[0].power == -1.0 - 2.0 * alpha);
    CHECK(e.terms[0].logpow == 0);
}

TEST_CASE("expansion error is bounded by the remainder descriptor") {
    // |I(t) - sum_{m<=M}| <= C t^{-nu-1} log^{k-M-1} t with stable C
    li::ModelIntegralSpec base{0.0, -1, {1.0, 0.0}, 1.0};
    for (int M : {1, 2, 3}) {
        auto expn = li::time_expansion(base, M);
        std::vector<double> cs;
        for (double t : {1e2, 1e3, 1e4}) {
            li::ModelIntegralSpec spec{0.0, -1, {1.0, 0.0}, t};
            complexd I = li::loop_integral_numeric(spec);
            complexd S = expn.eval(t);
            double rem = std::abs(I - S);
            cs.push_back(rem / expn.remainder_scale(t));
        }
        double cmax = *std::max_element(cs.begin(), cs.end());
        double cmin = *std::min_element(cs.begin(), cs.end());
        CHECK(cmax > 0.0);
        CHECK(cmax / cmin < 3.0);  // stable constant
    }
}

TEST_CASE("frak_J approaches t / log t") {
    complexd b{0.0, -1.0};
    for (double lt : {5.0, 10.0, 20.0}) {
        double t = std::exp(lt);
        complexd v = li::frak_J(b, t);
        complexd ratio = v * lt / t;
        CHECK(std::abs(ratio - 1.0) < 3.0 / lt);
    }
}

TEST_CASE("frak_J is delta independent") {
    complexd b{0.0, -1.0};
    double t = 55.0;
    li::ModelIntegralSpec spec{-2.0, -1, b, t};
    double d = li::default_delta(b, t);
    complexd v1 = li::loop_integral_numeric(spec, li::ContourSpec::infinite(d));
    complexd v2 = li::loop_integral_numeric(spec, li::ContourSpec::infinite(0.5 * d));
    CHECK(std::abs(v1 - v2) <= 1e-10 * std::abs(v1));
}

TEST_CASE("frak_J at t = e^10 matches its truncated expansion") {
    complexd b{0.0, -1.0};
    double t = std::exp(10.0);
    li::ModelIntegralSpec spec{-2.0, -1, b, 1.0};
    auto expn = li::time_expansion(spec, 2);
    complexd direct = li::frak_J(b, t) * kTwoPi;
    complexd approx = expn.eval(t);
    complexd c3 = li::asym_coeff(-2.0, -1, b, 3);
    double bound = 4.0 * std::abs(c3) * expn.remainder_scale(t);
    CHECK(std::abs(direct - approx) <= bound);
}

TEST_CASE("log time integral equals -2 pi / t") {
    complexd v = li::log_time_integral(20.0);
    CHECK(std::abs(v - complexd(-kTwoPi / 20.0, 0.0)) < 1e-6);
}

TEST_CASE("log time integral is finite and delta independent at t = 1") {
    li::ModelIntegralSpec spec{0.0, 1, {1.0, 0.0}, 1.0};
    complexd v1 = li::loop_integral_numeric(spec, li::ContourSpec::finite(1e-3, 1.0));
    complexd v2 = li::loop_integral_numeric(spec, li::ContourSpec::finite(5e-4, 1.0));
    CHECK(std::isfinite(v1.real()));
    CHECK(std::isfinite(v1.imag()));
    CHECK(std::abs(v1 - v2) < 1e-10 * (1.0 + std::abs(v1)));
}

TEST_CASE("log integrand expansion terminates: infinite contour equals -2 pi / t") {
    // c_{0,1,0} = 0 and binom(1,m) = 0 for m >= 2, so the expansion is exact
    complexd c1 = li::asym_coeff(0.0, 1, {1.0, 0.0}, 1);
    CHECK(std::abs(c1 + complexd(kTwoPi, 0.0)) < 1e-8);
    for (double t : {3.0, 7.0, 30.0}) {
        complexd I = numeric_infinite(0.0, 1, {1.0, 0.0}, t);
        CHECK(std::abs(I - c1 / t) < 1e-9 * std::abs(c1 / t) + 1e-14);
    }
}

TEST_CASE("binomial for negative upper index") {
    CHECK(li::binom_general(-1, 0) == 1.0);
    CHECK(li::binom_general(-1, 1) == -1.0);
    CHECK(li::binom_general(-1, 2) == 1.0);
    CHECK(li::binom_general(-2, 3) == -4.0);
    CHECK(li::binom_general(2, 3) == 0.0);
    CHECK(li::binom_general(3, 2) == 3.0);
}

TEST_CASE("contour and spec validation errors") {
    li::ModelIntegralSpec bad_b{0.0, 0, {0.0, 0.0}, 1.0};
    CHECK_THROWS_AS(li::loop_integral_numeric(bad_b), domain_error);
    li::ModelIntegralSpec axis_b{0.0, 1, {0.0, 2.0}, 1.0};
    CHECK_THROWS_AS(li::loop_integral_numeric(axis_b), domain_error);
    li::ModelIntegralSpec big_k{0.0, 9, {1.0, 0.0}, 1.0};
    CHECK_THROWS_AS(li::loop_integral_numeric(big_k), domain_error);
    // circle radius in the forbidden window around the log zero
    li::ModelIntegralSpec logspec{0.0, -1, {1.0, 0.0}, 1.0};
    CHECK_THROWS_AS(li::loop_integral_numeric(logspec, li::ContourSpec::infinite(1.0)),
                    domain_error);
    CHECK_THROWS_AS(li::frak_J({1.0, 0.0}, 10.0), domain_error);  // wrong arg b
    CHECK_THROWS_AS(li::frak_J({0.0, -1.0}, 0.5), domain_error);  // t <= 1
}
