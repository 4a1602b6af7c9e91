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

#include "wavetail/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavetail/errors.hpp"
#include "wavetail/quadrature.hpp"
#include "wavetail/specfun.hpp"

namespace wavetail::spectral {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

// ---------------------------------------------------------------------------
// RadialProfile
// ---------------------------------------------------------------------------

RadialProfile::RadialProfile(std::vector<double> nodes, std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
    if (nodes_.size() != values_.size() || nodes_.size() < 4)
        throw domain_error("RadialProfile: need >= 4 matching nodes/values");
    for (size_t i = 0; i + 1 < nodes_.size(); ++i)
        if (!(nodes_[i] < nodes_[i + 1]))
            throw domain_error("RadialProfile: nodes must be strictly ascending");
    if (!(nodes_.front() >= 0.0))
        throw domain_error("RadialProfile: radii must be nonnegative");
    for (double v : values_)
        if (!std::isfinite(v)) throw domain_error("RadialProfile: values must be finite");
    build_spline();
}

RadialProfile RadialProfile::from_function(std::function<double(double)> f, double lo,
                                           double hi, int n) {
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = lo + (hi - lo) * double(i) / (n - 1);
        ys[i] = f(xs[i]);
    }
    RadialProfile p(std::move(xs), std::move(ys));
    p.exact_ = std::move(f);
    return p;
}

RadialProfile RadialProfile::bump(double center, double width, int n) {
    if (!(center - width >= 0.0))
        throw domain_error("RadialProfile::bump: support must stay in r >= 0");
    auto f = [center, width](double r) {
        double u = (r - center) / width;
        if (std::fabs(u) >= 1.0) return 0.0;
        return std::exp(-1.0 / (1.0 - u * u));
    };
    return from_function(f, center - width, center + width, n);
}

RadialProfile RadialProfile::gaussian(double sigma, double r_max, int n) {
    auto f = [sigma](double r) { return std::exp(-0.5 * r * r / (sigma * sigma)); };
    return from_function(f, 0.0, r_max, n);
}

void RadialProfile::build_spline() {
    // clamped cubic spline on node slopes; end slopes from one-sided cubic fits
    size_t n = nodes_.size();
    auto end_slope = [&](bool left) {
        size_t base = left ? 0 : n - 4;
        double x0 = left ? nodes_[0] : nodes_[n - 1];
        double d = 0.0;
        for (int i = 0; i < 4; ++i) {
            double li = 0.0;
            for (int j = 0; j < 4; ++j) {
                if (j == i) continue;
                double p = 1.0;
                for (int m = 0; m < 4; ++m) {
                    if (m == i || m == j) continue;
                    p *= (x0 - nodes_[base + m]) / (nodes_[base + i] - nodes_[base + m]);
                }
                li += p / (nodes_[base + i] - nodes_[base + j]);
            }
            d += values_[base + i] * li;
        }
        return d;
    };
    std::vector<double> a(n, 0.0), bdiag(n, 0.0), c(n, 0.0), rhs(n, 0.0);
    bdiag[0] = 1.0;
    rhs[0] = end_slope(true);
    bdiag[n - 1] = 1.0;
    rhs[n - 1] = end_slope(false);
    for (size_t i = 1; i + 1 < n; ++i) {
        double hl = nodes_[i] - nodes_[i - 1], hr = nodes_[i + 1] - nodes_[i];
        a[i] = 1.0 / hl;
        bdiag[i] = 2.0 * (1.0 / hl + 1.0 / hr);
        c[i] = 1.0 / hr;
        rhs[i] = 3.0 * ((values_[i] - values_[i - 1]) / (hl * hl) +
                        (values_[i + 1] - values_[i]) / (hr * hr));
    }
    // Thomas solve
    for (size_t i = 1; i < n; ++i) {
        double w = a[i] / bdiag[i - 1];
        bdiag[i] -= w * c[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    slopes_.assign(n, 0.0);
    slopes_[n - 1] = rhs[n - 1] / bdiag[n - 1];
    for (size_t i = n - 1; i-- > 0;)
        slopes_[i] = (rhs[i] - c[i] * slopes_[i + 1]) / bdiag[i];
}

double RadialProfile::operator()(double r) const {
    if (r < nodes_.front() || r > nodes_.back()) return 0.0;
    if (exact_) return exact_(r);
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), r);
    size_t i = std::min(size_t(std::distance(nodes_.begin(), it)), nodes_.size() - 1);
    if (i == 0) i = 1;
    --i;
    double h = nodes_[i + 1] - nodes_[i];
    double u = (r - nodes_[i]) / h;
    double y0 = values_[i], y1 = values_[i + 1];
    double m0 = slopes_[i] * h, m1 = slopes_[i + 1] * h;
    double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * m0 +
           (-2 * u3 + 3 * u2) * y1 + (u3 - u2) * m1;
}

// ---------------------------------------------------------------------------
// SpectralProfile mesh
// ---------------------------------------------------------------------------

namespace {

std::vector<double> build_breaks(double lambda_max, double endpoint_exponent,
                                 const GridSpec& gs) {
    if (!(lambda_max > 0.0)) throw domain_error("SpectralProfile: lambda_max > 0 required");
    if (!(gs.grade_ratio > 0.0 && gs.grade_ratio <= 0.7))
        throw domain_error("SpectralProfile: grade ratio must be in (0, 0.7]");
    double knee = std::min(gs.knee, 0.25 * lambda_max);
    double h0 = gs.first_panel;
    if (h0 <= 0.0) {
        double e = std::min(std::max(endpoint_exponent, 0.0), 8.0);
        h0 = std::pow(1e-13, 1.0 / (1.0 + e));
        h0 = std::clamp(h0, 1e-9, std::min(1e-3, 0.25 * knee));
    }
    std::vector<double> breaks;
    breaks.push_back(0.0);
    double b = h0;
    while (b < knee) {
        breaks.push_back(b);
        b /= gs.grade_ratio;
    }
    int n_uniform = std::max(1, int(std::ceil((lambda_max - breaks.back()) / gs.h_cap)));
    double lo = breaks.back();
    for (int i = 1; i <= n_uniform; ++i)
        breaks.push_back(lo + (lambda_max - lo) * double(i) / n_uniform);
    breaks.back() = lambda_max;
    return breaks;
}

} // namespace

SpectralProfile::SpectralProfile(std::function<double(double)> evaluator,
                                 double lambda_max, double endpoint_exponent,
                                 double endpoint_limit, GridSpec grid)
    : eval_(std::move(evaluator)),
      lambda_max_(lambda_max),
      endpoint_exponent_(endpoint_exponent),
      endpoint_limit_(endpoint_limit),
      grid_(grid),
      breaks_(build_breaks(lambda_max, endpoint_exponent, grid)),
      values_(grid.max_refine_levels + 1) {}

double SpectralProfile::evaluate_raw(double lambda) {
    std::lock_guard<std::mutex> lock(*mu_);
    auto it = memo_.find(lambda);
    if (it != memo_.end()) return it->second;
    double v = eval_(lambda);
    memo_.emplace(lambda, v);
    return v;
}

std::vector<double> SpectralProfile::level_nodes(int level) const {
    int sub = 3 << level;  // 3 * 2^level intervals per base panel
    size_t npanel = breaks_.size() - 1;
    std::vector<double> nodes;
    nodes.reserve(npanel * (sub + 1));
    for (size_t p = 0; p < npanel; ++p) {
        double lo = breaks_[p], w = breaks_[p + 1] - breaks_[p];
        for (int j = 0; j <= sub; ++j)
            nodes.push_back(lo + (double(j) / sub) * w);
    }
    return nodes;
}

const std::vector<double>& SpectralProfile::level_values(int level) {
    if (level < 0 || level > grid_.max_refine_levels)
        throw domain_error("SpectralProfile: level out of range");
    {
        std::lock_guard<std::mutex> lock(*mu_);
        if (!values_[level].empty()) return values_[level];
    }
    std::vector<double> nodes = level_nodes(level);
    std::vector<double> vals(nodes.size());
    {
        std::lock_guard<std::mutex> lock(*mu_);
        if (!values_[level].empty()) return values_[level];
        for (size_t i = 0; i < nodes.size(); ++i) {
            auto it = memo_.find(nodes[i]);
            if (it != memo_.end()) {
                vals[i] = it->second;
            } else {
                vals[i] = eval_(nodes[i]);
                memo_.emplace(nodes[i], vals[i]);
            }
        }
        values_[level] = std::move(vals);
        return values_[level];
    }
}

// ---------------------------------------------------------------------------
// Filon panels
// ---------------------------------------------------------------------------

namespace {

// moments m_j = int_0^1 u^j e^{i theta u} du, j = 0..3
void filon_moments(double theta, complexd m[4]) {
    if (std::fabs(theta) < 0.8) {
        for (int j = 0; j < 4; ++j) {
            complexd acc{0.0, 0.0};
            complexd pw{1.0, 0.0};
            double fact = 1.0;
            for (int n = 0; n < 34; ++n) {
                if (n > 0) {
                    pw *= complexd{0.0, theta};
                    fact *= n;
                }
                complexd add = pw / (fact * (j + n + 1.0));
                acc += add;
                if (std::abs(add) < 1e-19 * std::abs(acc)) break;
            }
            m[j] = acc;
        }
        return;
    }
    complexd itheta{0.0, theta};
    complexd eit = std::exp(itheta);
    m[0] = (eit - 1.0) / itheta;
    for (int j = 1; j < 4; ++j) m[j] = (eit - double(j) * m[j - 1]) / itheta;
}

// int_0^1 u^s e^{i theta u} du for real s > -1 (series; |theta| modest)
complexd fractional_moment(double s, double theta) {
    complexd acc{0.0, 0.0};
    complexd pw{1.0, 0.0};
    double fact = 1.0;
    for (int n = 0; n < 80; ++n) {
        if (n > 0) {
            pw *= complexd{0.0, theta};
            fact *= n;
        }
        complexd add = pw / (fact * (s + n + 1.0));
        acc += add;
        if (std::abs(add) < 1e-19 * std::abs(acc) && n > 4) break;
    }
    return acc;
}

struct KahanC {
    complexd sum{0.0, 0.0};
    complexd comp{0.0, 0.0};
    void add(complexd v) {
        complexd y = v - comp;
        complexd t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// One refinement level of int_0^Lambda g(lambda) e^{i t lambda} dlambda.
// `gv(lambda, fval)` maps profile samples to integrand samples.
template <class GV>
complexd filon_level(const std::vector<double>& breaks, const std::vector<double>& fvals,
                     int level, double t_signed, double endpoint_exp, GV&& gv) {
    int sub = 3 << level;
    size_t npanel = breaks.size() - 1;
    size_t stride = sub + 1;
    KahanC total;
    for (size_t p = 0; p < npanel; ++p) {
        double lo = breaks[p], w = breaks[p + 1] - breaks[p];
        for (int q = 0; q < sub / 3; ++q) {
            int j0 = 3 * q;
            double a = lo + (double(j0) / sub) * w;
            double h = (3.0 / sub) * w;
            double lam[4], g[4];
            for (int i = 0; i < 4; ++i) {
                lam[i] = lo + (double(j0 + i) / sub) * w;
                g[i] = gv(lam[i], fvals[p * stride + j0 + i]);
            }
            double theta = t_signed * h;
            complexd panel;
            if (p == 0 && q == 0 && endpoint_exp > 1e-12 && std::fabs(theta) < 24.0) {
                // first panel: interpolate g / lambda^e quadratically and use
                // exact fractional moments against the oscillation
                double e = endpoint_exp;
                double q1 = g[1] / std::pow(lam[1], e);
                double q2 = g[2] / std::pow(lam[2], e);
                double q3 = g[3] / std::pow(lam[3], e);
                double d0 = 3.0 * q1 - 3.0 * q2 + q3;
                double d1 = -7.5 * q1 + 12.0 * q2 - 4.5 * q3;
                double d2 = 4.5 * q1 - 9.0 * q2 + 4.5 * q3;
                complexd acc = d0 * fractional_moment(e, theta) +
                               d1 * fractional_moment(e + 1.0, theta) +
                               d2 * fractional_moment(e + 2.0, theta);
                panel = std::pow(h, 1.0 + e) * acc;
                // e^{i t a} with a = 0 here
            } else {
                double c0 = g[0];
                double c1 = -5.5 * g[0] + 9.0 * g[1] - 4.5 * g[2] + g[3];
                double c2 = 9.0 * g[0] - 22.5 * g[1] + 18.0 * g[2] - 4.5 * g[3];
                double c3 = -4.5 * g[0] + 13.5 * g[1] - 13.5 * g[2] + 4.5 * g[3];
                complexd m[4];
                filon_moments(theta, m);
                complexd phase = std::exp(complexd{0.0, t_signed * a});
                panel = h * phase * (c0 * m[0] + c1 * m[1] + c2 * m[2] + c3 * m[3]);
            }
            total.add(panel);
        }
    }
    return total.sum;
}

template <class GV>
complexd filon_converged(SpectralProfile& g, double t_signed, double endpoint_exp,
                         double abs_tol, double rel_tol, GV&& gv) {
    const auto& breaks = g.base_breaks();
    complexd prev{0.0, 0.0};
    bool have_prev = false;
    double defect = 0.0;
    for (int level = 0; level <= g.max_levels(); ++level) {
        const auto& vals = g.level_values(level);
        complexd cur = filon_level(breaks, vals, level, t_signed, endpoint_exp, gv);
        if (have_prev) {
            defect = std::abs(cur - prev);
            if (defect <= abs_tol || defect <= rel_tol * std::abs(cur)) return cur;
        }
        prev = cur;
        have_prev = true;
    }
    throw budget_error("oscillatory quadrature: refinement budget exhausted, achieved ~" +
                       std::to_string(defect));
}

} // namespace

complexd oscillatory_quad(SpectralProfile& g, double t, Phase phase, double abs_tol,
                          double rel_tol) {
    double e = g.endpoint_exponent();
    auto identity = [](double, double fv) { return fv; };
    if (phase == Phase::sin) {
        if (t == 0.0) return {0.0, 0.0};
        complexd full = filon_converged(g, t, e, abs_tol, rel_tol, identity);
        return {full.imag(), 0.0};
    }
    complexd full = filon_converged(g, -t, e, abs_tol, rel_tol, identity);
    return full;
}

// ---------------------------------------------------------------------------
// Hankel transform
// ---------------------------------------------------------------------------

double hankel_transform_point(double nu, const RadialProfile& f, double lambda) {
    double lo = f.support_lo(), hi = f.support_hi();
    if (lambda == 0.0 && nu > 0.0) return 0.0;
    auto integrand = [&](double r) {
        double jr = (lambda == 0.0) ? 1.0 : specfun::bessel_j(nu, lambda * r);
        return f(r) * jr * r;
    };
    auto breaks = quad::oscillation_breaks(lo, hi, lambda, 4, 3);
    return quad::integrate_panels(integrand, breaks, 1e-14, 1e-12);
}

SpectralProfile hankel_transform(double nu, const RadialProfile& f, double lambda_max,
                                 GridSpec grid) {
    if (!(nu >= 0.0)) throw domain_error("hankel_transform: nu >= 0 required");
    RadialProfile data = f;  // owned copy for the closure
    auto evaluator = [nu, data](double lambda) mutable {
        return hankel_transform_point(nu, data, lambda);
    };
    if (lambda_max <= 0.0) {
        // smallest cutoff with |ftilde| < 1e-12 * max beyond it
        double max_seen = 0.0;
        int consecutive = 0;
        double lam = 0.0, step = 0.25;
        const double lam_cap = 1000.0;
        while (lam < lam_cap) {
            lam += step;
            double v = std::fabs(evaluator(lam));
            max_seen = std::max(max_seen, v);
            if (lam > 4.0 && v < 1e-12 * max_seen) {
                if (++consecutive >= 8) break;
            } else {
                consecutive = 0;
            }
            if (lam > 8.0) step = 0.5;
        }
        if (lam >= lam_cap)
            throw budget_error("hankel_transform: no spectral cutoff below lambda = 1000");
        lambda_max = lam;
    }
    double moment = quad::integrate(
        [&](double r) { return f(r) * std::pow(r, 1.0 + nu); }, f.support_lo(),
        f.support_hi(), 1e-14, 1e-12);
    double limit = moment * specfun::recip_gamma(nu + 1.0) / std::pow(2.0, nu);
    return SpectralProfile(std::move(evaluator), lambda_max, nu, limit, grid);
}

double inverse_hankel(double nu, SpectralProfile& ftilde, double r) {
    auto integrand = [&](double lambda) {
        double jr = (lambda == 0.0) ? ((nu == 0.0) ? 1.0 : 0.0)
                                    : specfun::bessel_j(nu, lambda * r);
        return ftilde.evaluate_raw(lambda) * jr * lambda;
    };
    auto breaks = quad::oscillation_breaks(0.0, ftilde.lambda_max(), r, 8, 3);
    return quad::integrate_panels(integrand, breaks, 1e-12, 1e-10);
}

double sine_evolution(double nu, SpectralProfile& ftilde, double t, double r,
                      double abs_tol, double rel_tol) {
    if (!(t >= 0.0)) throw domain_error("sine_evolution: t >= 0 required");
    if (!(r > 0.0)) throw domain_error("sine_evolution: r > 0 required");
    if (t == 0.0) return 0.0;
    double e = ftilde.endpoint_exponent() + nu;
    auto gv = [nu, r](double lambda, double fv) {
        if (lambda == 0.0) return (nu == 0.0) ? fv : 0.0;
        return specfun::bessel_j(nu, lambda * r) * fv;
    };
    complexd full = filon_converged(ftilde, t, e, abs_tol, rel_tol, gv);
    return full.imag();
}

double sine_evolution_dt(double nu, SpectralProfile& ftilde, double t, double r,
                         double abs_tol, double rel_tol) {
    if (!(r > 0.0)) throw domain_error("sine_evolution_dt: r > 0 required");
    double e = ftilde.endpoint_exponent() + nu + 1.0;
    auto gv = [nu, r](double lambda, double fv) {
        if (lambda == 0.0) return 0.0;
        return lambda * specfun::bessel_j(nu, lambda * r) * fv;
    };
    complexd full = filon_converged(ftilde, t, e, abs_tol, rel_tol, gv);
    return full.real();
}

namespace detail {

complexd filon_value_at_level(SpectralProfile& g, double t_signed, int level) {
    const auto& vals = g.level_values(level);
    auto identity = [](double, double fv) { return fv; };
    return filon_level(g.base_breaks(), vals, level, t_signed, g.endpoint_exponent(),
                       identity);
}

} // namespace detail

} // namespace wavetail::spectral
