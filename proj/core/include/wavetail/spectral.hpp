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
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace wavetail::spectral {

using complexd = std::complex<double>;

/// Compactly supported radial data profile.  Holds samples (nodes/values)
/// plus a clamped cubic spline through them; factories built from a closed
/// form also keep the exact closure so quadratures see a smooth integrand.
class RadialProfile {
public:
    RadialProfile(std::vector<double> nodes, std::vector<double> values);

    static RadialProfile from_function(std::function<double(double)> f, double lo,
                                       double hi, int n = 801);
    /// Smooth bump exp(-1/(1-u^2)), u = (r-center)/width, on its support.
    static RadialProfile bump(double center = 2.0, double width = 1.0, int n = 801);
    static RadialProfile gaussian(double sigma, double r_max, int n = 1601);

    double operator()(double r) const;  // 0 outside the support
    double support_lo() const { return nodes_.front(); }
    double support_hi() const { return nodes_.back(); }
    double support_bound() const { return nodes_.back(); }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& values() const { return values_; }

private:
    void build_spline();

    std::vector<double> nodes_, values_, slopes_;
    std::function<double(double)> exact_;  // may be empty
};

/// Mesh controls for spectral grids: geometric grading toward lambda = 0
/// (ratio <= 0.7 resolves the lambda^e endpoint) and a uniform panel cap
/// elsewhere; refinement levels split every panel in two.
struct GridSpec {
    double grade_ratio = 0.65;
    double h_cap = 0.05;
    double knee = 0.5;
    double first_panel = 0.0;  // 0 = choose from the endpoint exponent
    int max_refine_levels = 5;
};

/// A function sampled on a graded panel mesh over [0, lambda_max], refinable
/// on demand.  Node values are memoized, so refinement levels and repeated
/// consumers share evaluations.  Thread-safe.
class SpectralProfile {
public:
    SpectralProfile(std::function<double(double)> evaluator, double lambda_max,
                    double endpoint_exponent, double endpoint_limit,
                    GridSpec grid = {});

    double lambda_max() const { return lambda_max_; }
    double endpoint_exponent() const { return endpoint_exponent_; }
    /// lim_{lambda -> 0} value / lambda^exponent.
    double endpoint_limit() const { return endpoint_limit_; }
    const GridSpec& grid() const { return grid_; }
    int max_levels() const { return grid_.max_refine_levels; }

    const std::vector<double>& base_breaks() const { return breaks_; }
    /// Node count per base panel at level L is 3 * 2^L + 1.
    std::vector<double> level_nodes(int level) const;
    const std::vector<double>& level_values(int level);

    double evaluate_raw(double lambda);  // memoized single evaluation

private:
    std::function<double(double)> eval_;
    double lambda_max_, endpoint_exponent_, endpoint_limit_;
    GridSpec grid_;
    std::vector<double> breaks_;
    std::vector<std::vector<double>> values_;  // per level, flattened per base panel
    std::map<double, double> memo_;
    std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
};

enum class Phase { sin, exp_minus };

/// Filon-type integral of the mesh-sampled profile against sin(t lambda) or
/// e^{-i t lambda}: per panel the smooth factor is interpolated (cubic;
/// lambda^e-weighted quadratic on the first panel) and the oscillation is
/// integrated exactly.  Refines levels until two agree within tolerance.
complexd oscillatory_quad(SpectralProfile& g, double t, Phase phase,
                          double abs_tol = 1e-12, double rel_tol = 1e-9);

/// Hankel transform  ftilde(lambda) = int f(r) J_nu(lambda r) r dr  sampled
/// on a graded mesh.  lambda_max = 0 selects the smallest cutoff with
/// |ftilde| < 1e-12 * max beyond it.
SpectralProfile hankel_transform(double nu, const RadialProfile& f,
                                 double lambda_max = 0.0, GridSpec grid = {});

/// Single transform value (no mesh).
double hankel_transform_point(double nu, const RadialProfile& f, double lambda);

/// Inverse transform  int_0^Lambda J_nu(lambda r) ftilde(lambda) lambda dlambda.
double inverse_hankel(double nu, SpectralProfile& ftilde, double r);

/// Mode amplitude of the wave at time t, radius r:
///   u_nu(t, r) = int_0^Lambda sin(t lambda) J_nu(lambda r) ftilde(lambda) dlambda.
double sine_evolution(double nu, SpectralProfile& ftilde, double t, double r,
                      double abs_tol = 1e-11, double rel_tol = 1e-7);

/// Time derivative of the same mode amplitude.
double sine_evolution_dt(double nu, SpectralProfile& ftilde, double t, double r,
                         double abs_tol = 1e-11, double rel_tol = 1e-7);

namespace detail {
/// Single-level Filon value (no convergence loop); for refinement studies.
complexd filon_value_at_level(SpectralProfile& g, double t_signed, int level);
} // namespace detail

} // namespace wavetail::spectral
