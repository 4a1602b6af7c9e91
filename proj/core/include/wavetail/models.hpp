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

#include <map>
#include <memory>
#include <vector>

#include "wavetail/expansion.hpp"
#include "wavetail/spectral.hpp"

namespace wavetail::models {

using complexd = std::complex<double>;

struct ModeData {
    int index;  // angular mode: j >= 1 for the sector, m in Z for the plane
    spectral::RadialProfile profile;
};

struct ObservationPoint {
    double r = 2.0;
    double angle = 0.0;  // y in the sector, theta in the plane
};

struct CutoffWindow {
    double r_max = 6.0;
    std::vector<ObservationPoint> points;

    void validate() const;
};

struct ModelTerms {
    std::vector<expansion::ResolventTerm> terms;  // sorted by nu ascending
    expansion::TruncationOrder truncation;
};

/// Dirichlet sector (0, infinity) x (0, L), L = pi / alpha; angular modes
/// sin(alpha j y).  Retained data modes must keep alpha * j away from the
/// integers (quantitative stand-in for the Diophantine hypothesis).
class ConeModel {
public:
    ConeModel(double alpha, std::vector<ModeData> data);

    double alpha() const { return alpha_; }
    double opening() const;
    const std::vector<ModeData>& data() const { return data_; }

    /// Resolvent applied to the data, evaluated at (r, y); requires
    /// lambda != 0 with arg lambda in (-pi/4, pi).
    complexd resolvent_apply(complexd lambda, double r, double y) const;

    /// Weight of the leading fractional power lambda^{2 alpha j} of mode j.
    complexd mode_leading_weight(int j, double r, double y) const;
    /// Same for j = 1: the classical A_{1,0} coefficient applied to the data.
    complexd a10(double r, double y) const { return mode_leading_weight(1, r, y); }

    /// Leading constant of the long-time law u ~ c1 t^{-1-2alpha} r^alpha
    /// sin(alpha y), computed from the sector integral of the data.
    double leading_constant() const;

    /// Spectral-theorem wave value (independent of the expansion path).
    double wave_oracle(double t, double r, double y);

    ModelTerms terms(double r, double y) const;

private:
    spectral::SpectralProfile& mode_profile(int j);

    double alpha_;
    std::vector<ModeData> data_;
    std::map<int, std::unique_ptr<spectral::SpectralProfile>> profiles_;
};

/// Single-pole Aharonov-Bohm Hamiltonian with total flux beta (Friedrichs
/// realization): angular modes e^{i m theta}, radial Bessel order |m - beta|.
class ABModel {
public:
    enum class FluxClass { half_odd, generic, integer };

    ABModel(double beta, std::vector<ModeData> data);

    double beta() const { return beta_; }
    FluxClass flux_class() const;
    double mu_min() const;
    double mu_max() const;
    double order(int m) const;
    const std::vector<ModeData>& data() const { return data_; }

    complexd resolvent_apply(complexd lambda, double r, double theta) const;
    complexd wave_oracle(double t, double r, double theta);
    ModelTerms terms(double r, double theta) const;

    /// Shape of the integer-flux resolvent expansion head with unit leading
    /// weight: {nu = 0, k = -1, b = 1, w = 1}.  For a single pole the actual
    /// interaction constants are not determined by the closed form (the pole
    /// is gauge-equivalent to the free plane), so this list carries only the
    /// law -- exponents and log powers -- for pipeline-level checks.
    static std::vector<expansion::ResolventTerm> integer_flux_structural_terms();

private:
    spectral::SpectralProfile& mode_profile(int m);

    double beta_;
    std::vector<ModeData> data_;
    std::map<int, std::unique_ptr<spectral::SpectralProfile>> profiles_;
};

/// Free plane (flux 0): exercises the log lambda machinery of the k = +1
/// family; leading long-time behavior t u(t) -> const.
class FreePlaneModel {
public:
    explicit FreePlaneModel(std::vector<ModeData> data);

    const std::vector<ModeData>& data() const;
    complexd resolvent_apply(complexd lambda, double r, double theta) const;
    complexd wave_oracle(double t, double r, double theta);
    ModelTerms terms(double r, double theta) const;

    /// Coefficient of log(lambda) in the small-lambda resolvent at (r,
    /// theta), from a two-point fit; the long-time constant of t u(t) is
    /// minus this value.
    complexd log_coefficient_fit(double r, double theta) const;

private:
    ABModel inner_;
};

} // namespace wavetail::models
