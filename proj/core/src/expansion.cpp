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

#include "wavetail/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "wavetail/errors.hpp"

namespace wavetail::expansion {

namespace {
constexpr double kTwoPi = 6.28318530717958647692528676655900577;
}

void ResolventTerm::validate() const {
    if (!(nu >= -2.0))
        throw domain_error("ResolventTerm: exponents below -2 are not supported");
    if (std::abs(k) > 8) throw domain_error("ResolventTerm: |k| <= 8 supported");
    if (b == complexd(0.0, 0.0)) throw domain_error("ResolventTerm: b must be nonzero");
    if (b.real() == 0.0 && b.imag() > 0.0)
        throw domain_error("ResolventTerm: b must avoid i[0, infinity)");
}

ZeroEnergyResult uz_exact(std::span<const ResolventTerm> terms, double t,
                          double ray_length) {
    if (!(t > 0.0)) throw domain_error("uz_exact: t must be positive");
    if (!(ray_length > 0.0)) throw domain_error("uz_exact: ray length must be positive");
    for (size_t i = 0; i + 1 < terms.size(); ++i)
        if (terms[i].nu > terms[i + 1].nu + 1e-14)
            throw domain_error("uz_exact: terms must be sorted by nu ascending");

    ZeroEnergyResult out;
    out.t = t;
    out.terms_used = int(terms.size());
    out.tail_bound = 0.0;
    for (const auto& term : terms) {
        term.validate();
        if (term.weight == complexd(0.0, 0.0)) continue;
        loopint::ModelIntegralSpec spec{term.nu, term.k, term.b, t};
        auto contour = loopint::ContourSpec::finite(
            loopint::default_delta(term.b, t), ray_length);
        out.value += term.weight * loopint::loop_integral_numeric(spec, contour);
    }
    out.value /= kTwoPi;
    return out;
}

std::vector<loopint::TimeTerm> uz_asymptotic(std::span<const ResolventTerm> terms, int M) {
    // collect like terms keyed by (power, logpow); powers quantized to 1e-12
    auto key_of = [](double power, int logpow) {
        return std::pair<long long, int>(llround(power * 1e12), logpow);
    };
    std::map<std::pair<long long, int>, loopint::TimeTerm> acc;
    for (const auto& term : terms) {
        term.validate();
        if (term.weight == complexd(0.0, 0.0)) continue;
        loopint::ModelIntegralSpec spec{term.nu, term.k, term.b, 1.0};
        auto exp = loopint::time_expansion(spec, M);
        for (auto tt : exp.terms) {
            tt.coeff *= term.weight / kTwoPi;
            if (std::abs(tt.coeff) < 1e-250) continue;
            auto key = key_of(tt.power, tt.logpow);
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(key, tt);
            else
                it->second.coeff += tt.coeff;
        }
    }
    std::vector<loopint::TimeTerm> out;
    out.reserve(acc.size());
    for (auto& [key, tt] : acc)
        if (std::abs(tt.coeff) > 1e-250) out.push_back(tt);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.power != b.power) return a.power > b.power;  // slower decay first
        return a.logpow > b.logpow;
    });
    return out;
}

complexd eval_terms(std::span<const loopint::TimeTerm> terms, double t) {
    complexd acc{0.0, 0.0};
    for (const auto& term : terms) acc += term.eval(t);
    return acc;
}

int TruncationOrder::integer_rate() const {
    if (empty) return std::numeric_limits<int>::max();
    return int(std::ceil(nu_min - 1e-12)) - 1;
}

TruncationOrder truncation_order(double nu_min, int k_max) {
    if (!(nu_min > 0.0))
        throw domain_error("truncation_order: dropped exponents must be positive");
    TruncationOrder out;
    out.nu_min = nu_min;
    out.k_max = k_max;
    out.empty = false;
    return out;
}

} // namespace wavetail::expansion
