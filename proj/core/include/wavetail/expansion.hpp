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

#include <limits>
#include <span>
#include <vector>

#include "wavetail/loopint.hpp"

namespace wavetail::expansion {

using complexd = std::complex<double>;

// One term of a low-energy resolvent expansion: weight * lambda^nu *
// log^k(b lambda).  The weight is the operator coefficient already applied
// to the data and evaluated at the observation point.
struct ResolventTerm {
    double nu = 0.0;
    int k = 0;
    complexd b{1.0, 0.0};
    complexd weight{0.0, 0.0};

    void validate() const;
};

struct ZeroEnergyResult {
    double t = 0.0;
    complexd value{0.0, 0.0};
    int terms_used = 0;
    double tail_bound = 0.0;  // zero for finite term lists
};

/// u_z(t) = (1/2pi) sum weight_j * loop integral over gamma(delta, c).
/// Terms must be sorted by nu ascending.
ZeroEnergyResult uz_exact(std::span<const ResolventTerm> terms, double t,
                          double ray_length = 1.0);

/// Merged long-time expansion of the same sum: every term's expansion to M
/// log-corrections, like terms collected, sorted slowest-decaying first
/// (larger t-exponent first, then higher log power).
std::vector<loopint::TimeTerm> uz_asymptotic(std::span<const ResolventTerm> terms, int M);

complexd eval_terms(std::span<const loopint::TimeTerm> terms, double t);

// Order descriptor for a dropped expansion tail starting at exponent nu_min:
// the dropped contribution is O(t^{-N}) for every integer N < nu_min
// (nonstationary-phase bound), recorded with the real exponent as well.
struct TruncationOrder {
    double nu_min = std::numeric_limits<double>::infinity();
    int k_max = 0;
    bool empty = true;

    static TruncationOrder none() { return {}; }

    /// Largest integer decay rate the tail bound guarantees.
    int integer_rate() const;
    /// Real exponent of the bound, open at the endpoint.
    double bound_exponent() const { return nu_min; }
};

TruncationOrder truncation_order(double nu_min, int k_max);

} // namespace wavetail::expansion
