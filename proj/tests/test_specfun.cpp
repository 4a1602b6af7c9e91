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

#include <cmath>
#include <complex>
#include <random>

#include "wavetail/errors.hpp"
#include "wavetail/specfun.hpp"

using namespace wavetail;
namespace sf = wavetail::specfun;
using complexd = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(1e-300, std::fabs(want));
}

double rel_err(complexd got, complexd want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

struct JYRef {
    double nu, x, value;
};

// Reference values computed with mpmath at 40 significant digits.
const JYRef kJRef[] = {
    {0, 0.5, 0.9384698072408129042284},
    {0.5, 3.0, 0.065008182877375778114},
    {1.7, 3.0, 0.4944325227347840501674},
    {7.3, 25.0, 0.05160328662455137171155},
    {2.0, 10.0, 0.2546303136851206225317},
    {0.75, 18.5, -0.1242627365805621973679},
    {10.0, 12.0, 0.3004760352712693107316},
    {12.0, 30.0, 0.1482533510996601002093},
    {30.0, 25.0, 0.01180902612426901619969},
    {50.0, 60.0, -0.1379827314853521204732},
    {80.0, 45.0, 3.089983455407562533285e-14},
    {5.0, 1000.0, 0.005025406945233186074239},
    {0.3, 95000.0, -0.002569086943724661508695},
    {160.0, 14000.0, 0.002493638886974871492328},
    {200.0, 21000.0, -0.001044684591503218290383},
    {3.0, 20.0, -0.09890139456044967561288},
    {6.4, 20.5, -0.05929372720443860967016},
    {0.0, 20.0, 0.1670246643405831547273},
    {1.0, 0.0001, 0.00004999999993750000242213},
    {25.0, 80.0, 0.09106379155568028003022},
};

const JYRef kYRef[] = {
    {0, 0.5, -0.4445187335067065571484},
    {0.5, 3.0, 0.4560488207946331788468},
    {2.0, 10.0, -0.005868082442208614639803},
    {1.7, 3.0, -0.01470979262776754175782},
    {0.75, 18.5, -0.1377908011737835459511},
    {10.0, 12.0, -0.02287631407049970088793},
    {12.0, 30.0, 0.03414317134646022475314},
    {30.0, 25.0, -1.657580909409400335847},
    {5.0, 1000.0, -0.02472595671974069074583},
    {0.0, 20.0, 0.06264059680938383116173},
    {3.0, 0.01, -5093021.841713736672847},
    {7.0, 2.0, -271.5480253679936702972},
    {200.0, 21000.0, 0.005406037022167738810663},
    {6.0, 0.002, -38197193981493099154.44},
    {1.0, 0.001, -636.6221672311394148221},
};

struct H1Ref {
    double nu;
    complexd z, value;
    double tol = 1e-10;
};

const H1Ref kH1Ref[] = {
    {1.5, {2.0, 0.1}, {0.4396086361326171239097, -0.3806835192394815603056}},
    {0.75, {0.001, 0.002}, {-47.08346237426660937366, -43.03679142970541614564}},
    {3.0, {1.0, 2.0}, {-0.06892089636651013064526, 0.3073283562429360085143}},
    {0.0, {0.05, 0.0}, {0.9993750976494685808058, -1.979311000817209636646}},
    {2.25, {0.004, 0.002}, {-286593.0504953449103266, -166994.1723238373286907}},
    // deep off-axis: J + iY cancellation limits accuracy to ~e^{2 Im z} eps
    {0.3, {30.0, 10.0}, {-6.137711849961219083104e-6, -1.937547047710374023185e-6}, 1e-6},
    {1.0, {0.0001, 0.5}, {-1.054523115418227784649, -0.0002697549692067901415669}},
    {7.5, {3.0, 1.0}, {-21.63060893256912035737, 14.70687663609136645194}},
    {0.0, {60.0, 20.0}, {-1.659592964873179119907e-10, 1.23151557767971104764e-10}},
    {4.0, {0.0, 2.5}, {0.0, -0.48714486058430730047}},
};

struct GammaRef {
    complexd z, value;
};

const GammaRef kGammaRef[] = {
    {{0.5, 0}, {1.772453850905516027298, 0.0}},
    {{5, 0}, {24.0, 0.0}},
    {{1, 1}, {0.4980156681183560427137, -0.154949828301810685125}},
    {{-1.5, 0.5}, {0.9379166627878850509673, 0.3492056681478048685941}},
    {{0.1, -3}, {0.0136628749275755558551, 0.004915311156096227154969}},
    {{12.3, 7.7}, {6307826.505838174018658, 4740444.570666222326756}},
    {{-4.2, 0.0}, {-0.1640610504776140533336, 0.0}},
};

} // namespace

TEST_CASE("gamma matches high precision references") {
    for (const auto& ref : kGammaRef) {
        complexd got = sf::gamma(ref.z);
        CHECK(rel_err(got, ref.value) < 1e-12);
    }
    CHECK(rel_err(sf::gamma(0.5), std::sqrt(kPi)) < 1e-13);
    CHECK(rel_err(sf::gamma(5.0), 24.0) < 1e-13);
    CHECK_THROWS_AS(sf::gamma(complexd(-3.0, 0.0)), domain_error);
    CHECK_THROWS_AS(sf::gamma(0.0), domain_error);
}

TEST_CASE("gamma recurrence at 1+i") {
    // Gamma(2+i) = (1+i) Gamma(1+i)
    complexd g1 = sf::gamma(complexd(1.0, 1.0));
    complexd g2 = sf::gamma(complexd(2.0, 1.0));
    CHECK(rel_err(g2, complexd(1.0, 1.0) * g1) < 1e-13);
}

TEST_CASE("gamma reflection identity on random points") {
    std::mt19937 rng(20260810);
    std::uniform_real_distribution<double> ur(-10.0, 10.0);
    int tested = 0;
    while (tested < 100) {
        complexd z{ur(rng), ur(rng)};
        if (std::fabs(z.imag()) < 0.05 &&
            std::fabs(z.real() - std::round(z.real())) < 0.05)
            continue;
        complexd lhs = sf::gamma(z) * sf::gamma(1.0 - z) * std::sin(kPi * z) / kPi;
        CHECK(std::abs(lhs - 1.0) < 1e-10);
        ++tested;
    }
}

TEST_CASE("gamma duplication identity") {
    for (double alpha = 0.05; alpha < 5.0; alpha += 0.191) {
        double lhs = std::sqrt(kPi) * sf::gamma(1.0 + 2.0 * alpha);
        double rhs = std::pow(2.0, 2.0 * alpha) * sf::gamma(0.5 + alpha) * sf::gamma(1.0 + alpha);
        CHECK(rel_err(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("polygamma classical values") {
    CHECK(std::fabs(sf::polygamma(0, 1.0) + kEulerGamma) < 1e-13);
    CHECK(rel_err(sf::polygamma(1, 1.0), kPi * kPi / 6.0) < 1e-13);
    CHECK(rel_err(sf::polygamma(0, 3.0), -kEulerGamma + 1.0 + 0.5) < 1e-13);
    // mpmath references
    CHECK(rel_err(sf::polygamma(2, 2.5), -0.2362040516417274030037) < 1e-12);
    CHECK(rel_err(sf::polygamma(3, 1.5), 1.40909103400243723644) < 1e-12);
    CHECK(rel_err(sf::polygamma(4, 4.0), -0.03750069134211279985401) < 1e-12);
    CHECK(rel_err(sf::polygamma(6, 2.0), -6.011479714984435324654) < 1e-12);
    CHECK(rel_err(sf::polygamma(1, 0.5), 4.934802200544679309417) < 1e-12);
    CHECK(rel_err(sf::polygamma(2, 7.3), -0.02151081444162025203711) < 1e-12);
    CHECK(rel_err(sf::polygamma(0, complexd(1.5, 2.0)),
                  complexd(0.7998337581729536799066, 1.100197135729858677448)) < 1e-12);
    CHECK(rel_err(sf::polygamma(1, complexd(0.5, -1.0)),
                  complexd(0.03672455194101454456074, 1.117068657829600126812)) < 1e-12);
    CHECK(rel_err(sf::polygamma(3, complexd(2.0, 3.0)),
                  complexd(-0.05383196209159972116041, 0.007689093524736480521831)) < 1e-12);
    CHECK_THROWS_AS(sf::polygamma(0, complexd(-2.0, 0.0)), domain_error);
    CHECK_THROWS_AS(sf::polygamma(7, complexd(1.0, 0.0)), domain_error);
}

TEST_CASE("polygamma matches finite differences of the previous order") {
    const double h = 1e-4;
    for (int m = 1; m <= 6; ++m) {
        for (double x : {0.7, 1.3, 2.9, 6.1}) {
            double fd = (sf::polygamma(m - 1, x + h) - sf::polygamma(m - 1, x - h)) / (2.0 * h);
            CHECK(std::fabs(fd - sf::polygamma(m, x)) <
                  1e-6 * (1.0 + std::fabs(sf::polygamma(m, x))));
        }
    }
}

TEST_CASE("bessel_j reference table") {
    for (const auto& ref : kJRef) {
        double got = sf::bessel_j(ref.nu, ref.x);
        // relative away from zeros, absolute near them
        double err = std::fabs(got - ref.value);
        CHECK(err < std::max(1e-12, 1e-10 * std::fabs(ref.value)));
    }
}

TEST_CASE("bessel_y reference table") {
    for (const auto& ref : kYRef) {
        double got = sf::bessel_y(ref.nu, ref.x);
        double err = std::fabs(got - ref.value);
        CHECK(err < std::max(1e-12, 1e-9 * std::fabs(ref.value)));
    }
}

TEST_CASE("bessel small-argument leading behavior") {
    double x = 1e-6;
    CHECK(rel_err(sf::bessel_j(0.0, x), 1.0 - x * x / 4.0) < 1e-12);
}

TEST_CASE("half-integer closed forms") {
    for (double x : {0.3, 1.7, 8.0, 19.0, 44.0}) {
        double j = sf::bessel_j(0.5, x);
        double y = sf::bessel_y(0.5, x);
        double amp = std::sqrt(2.0 / (kPi * x));
        CHECK(std::fabs(j - amp * std::sin(x)) < 1e-12 + 1e-10 * amp);
        CHECK(std::fabs(y + amp * std::cos(x)) < 1e-12 + 1e-10 * amp);
    }
}

TEST_CASE("bessel recurrence J_{nu-1} + J_{nu+1} = (2 nu / x) J_nu") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unu(1.0, 40.0), ux(0.5, 120.0);
    for (int i = 0; i < 200; ++i) {
        double nu = unu(rng), x = ux(rng);
        double lhs = sf::bessel_j(nu - 1.0, x) + sf::bessel_j(nu + 1.0, x);
        double rhs = 2.0 * nu / x * sf::bessel_j(nu, x);
        double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-280});
        CHECK(std::fabs(lhs - rhs) / scale < 1e-9);
    }
}

TEST_CASE("wronskian J Y identity") {
    for (double nu : {0.0, 0.5, 1.7, 3.0, 7.25, 29.5}) {
        for (double x : {3.0, 10.0, 21.0, 55.0, 301.0}) {
            double w = sf::bessel_j(nu, x) * sf::bessel_y_derivative(nu, x) -
                       sf::bessel_j_derivative(nu, x) * sf::bessel_y(nu, x);
            CHECK(rel_err(w, 2.0 / (kPi * x)) < 1e-9);
        }
    }
}

TEST_CASE("two-method agreement: series vs dispatch across the switchover") {
    // the double-double series stays trustworthy past the x = 20 switch;
    // compare it against the asymptotic/Miller routes used by the dispatcher
    for (double nu : {0.0, 0.75, 2.0, 6.3, 7.3, 11.0}) {
        for (double x : {20.5, 25.0, 31.0, 39.5}) {
            double series = sf::detail::bessel_j_series(nu, complexd(x, 0.0)).real();
            double dispatch = sf::bessel_j(nu, x);
            CHECK(std::fabs(series - dispatch) < std::max(1e-12, 1e-10 * std::fabs(series)));
        }
    }
}

TEST_CASE("hankel1 equals J + iY on the real axis") {
    for (double nu : {0.0, 0.3, 1.5, 4.0}) {
        for (double x : {0.7, 5.0, 26.0}) {
            complexd h = sf::hankel1(nu, complexd(x, 0.0));
            CHECK(rel_err(h, complexd(sf::bessel_j(nu, x), sf::bessel_y(nu, x))) < 1e-12);
        }
    }
}

TEST_CASE("hankel1 small-argument leading behavior") {
    // H1_nu(z) ~ -(i/pi) Gamma(nu) (2/z)^nu for small z, nu > 0
    double nu = 1.25;
    complexd z{1e-5, 3e-6};
    complexd lead = complexd(0.0, -1.0 / kPi) * sf::gamma(complexd(nu, 0.0)) *
                    std::pow(2.0 / z, nu);
    CHECK(std::abs(sf::hankel1(nu, z) - lead) / std::abs(lead) < 1e-4);
}

TEST_CASE("hankel1 complex reference table") {
    for (const auto& ref : kH1Ref) {
        complexd got = sf::hankel1(ref.nu, ref.z);
        CHECK(rel_err(got, ref.value) < ref.tol);
    }
}

TEST_CASE("hankel1 analytic continuation agrees with a Taylor step off the axis") {
    // Step z0 -> z0 + i dy with the Bessel ODE driving the Taylor series:
    // w'' = -(1 - nu^2/z^2) w - w'/z, coefficients from the real-axis values.
    double nu = 1.5, x0 = 2.0, dy = 0.1;
    complexd z0{x0, 0.0};
    complexd w0{sf::bessel_j(nu, x0), sf::bessel_y(nu, x0)};
    complexd w1{sf::bessel_j_derivative(nu, x0), sf::bessel_y_derivative(nu, x0)};
    std::vector<complexd> c = {w0, w1};
    for (int k = 2; k <= 30; ++k) {
        // z^2 w'' + z w' + (z^2 - nu^2) w = 0 gives the coefficient recurrence
        // around z0 via w(z0+h): assemble by differentiating the ODE:
        // w'' = (nu^2/z^2 - 1) w - w'/z  and extend derivatives numerically.
        break;
    }
    // Simpler: 4th order Runge-Kutta on the ODE system along the segment.
    complexd w = w0, wp = w1;
    int steps = 2000;
    complexd h{0.0, dy / steps};
    auto rhs = [nu](complexd z, complexd w_, complexd wp_) {
        return (nu * nu / (z * z) - 1.0) * w_ - wp_ / z;
    };
    complexd z = z0;
    for (int s = 0; s < steps; ++s) {
        complexd k1w = wp, k1p = rhs(z, w, wp);
        complexd k2w = wp + 0.5 * h * k1p, k2p = rhs(z + 0.5 * h, w + 0.5 * h * k1w, wp + 0.5 * h * k1p);
        complexd k3w = wp + 0.5 * h * k2p, k3p = rhs(z + 0.5 * h, w + 0.5 * h * k2w, wp + 0.5 * h * k2p);
        complexd k4w = wp + h * k3p, k4p = rhs(z + h, w + h * k3w, wp + h * k3p);
        w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
        wp += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        z += h;
    }
    complexd direct = sf::hankel1(nu, complexd(x0, dy));
    CHECK(std::abs(w - direct) / std::abs(direct) < 1e-9);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(sf::bessel_j(-1.0, 2.0), domain_error);
    CHECK_THROWS_AS(sf::bessel_j(201.0, 2.0), domain_error);
    CHECK_THROWS_AS(sf::bessel_j(1.0, 0.0), domain_error);
    CHECK_THROWS_AS(sf::bessel_j(1.0, 2e5), domain_error);
    CHECK_THROWS_AS(sf::bessel_y(150.0, 0.5), domain_error);  // overflow
    CHECK_THROWS_AS(sf::hankel1(1.0, complexd(0.0, -2.0)), domain_error);  // arg -pi/2
    CHECK_THROWS_AS(sf::hankel1(1.0, complexd(-1.0, -1.0)), domain_error);
}
