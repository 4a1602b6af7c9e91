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

#include <cmath>
#include <complex>

namespace wavetail::detail {

// Compensated double-double arithmetic (Dekker/Knuth error-free transforms).
// Used where power series suffer cancellation: Bessel series at moderate
// argument, the J/Y combination for Hankel functions off the real axis, and
// phase reduction in the large-argument asymptotics.  ~31 significant digits.
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    constexpr dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd operator+(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return quick_two_sum(s.hi, lo);
}

inline dd operator-(dd a, dd b) { return a + dd{-b.hi, -b.lo}; }
inline dd operator-(dd a) { return {-a.hi, -a.lo}; }

inline dd operator*(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd operator*(dd a, double b) { return a * dd{b}; }
inline dd operator*(double a, dd b) { return dd{a} * b; }
inline dd operator+(dd a, double b) { return a + dd{b}; }
inline dd operator-(dd a, double b) { return a - dd{b}; }

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - q1 * b;
    double q2 = r.hi / b.hi;
    r = r - q2 * b;
    double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return q + dd{q3};
}

inline dd operator/(dd a, double b) { return a / dd{b}; }

inline bool abs_less(dd a, double b) { return std::fabs(a.hi) < b; }

// Complex double-double, just the operations the series kernels need.
struct cdd {
    dd re, im;

    cdd() = default;
    cdd(dd r, dd i) : re(r), im(i) {}
    cdd(double r, double i = 0.0) : re(r), im(i) {}
    explicit cdd(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> value() const { return {re.value(), im.value()}; }
};

inline cdd operator+(cdd a, cdd b) { return {a.re + b.re, a.im + b.im}; }
inline cdd operator-(cdd a, cdd b) { return {a.re - b.re, a.im - b.im}; }
inline cdd operator*(cdd a, cdd b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline cdd operator*(cdd a, dd b) { return {a.re * b, a.im * b}; }
inline cdd operator*(dd a, cdd b) { return b * a; }
inline cdd operator/(cdd a, dd b) { return {a.re / b, a.im / b}; }
inline cdd operator/(cdd a, double b) { return {a.re / b, a.im / b}; }

inline double abs_estimate(cdd a) {
    return std::hypot(a.re.hi, a.im.hi);
}

// Reduce x into [0, 2*pi) carrying the remainder in double-double, so that
// large oscillatory phases (x up to 1e5 and beyond) keep absolute accuracy.
inline dd reduce_two_pi(double x) {
    // hi = nearest double to 2*pi, lo = 2*pi - hi
    static const dd two_pi{6.283185307179586232, 2.4492935982947064e-16};
    double n = std::floor(x / two_pi.value());
    dd r = dd{x} - dd{n * two_pi.hi, n * two_pi.lo};
    while (r.value() < 0.0) r = r + two_pi;
    while (r.value() >= two_pi.value()) r = r - two_pi;
    return r;
}

} // namespace wavetail::detail
