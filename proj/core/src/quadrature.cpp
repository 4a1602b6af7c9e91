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

#include "wavetail/quadrature.hpp"

#include <algorithm>
#include <vector>

namespace wavetail::quad {

std::vector<double> oscillation_breaks(double a, double b, double k,
                                       int min_panels, int per_cycle,
                                       int max_panels) {
    double cycles = std::fabs(k) * (b - a) / (2.0 * 3.14159265358979323846);
    int n = std::max<int>(min_panels, int(cycles * per_cycle) + 1);
    n = std::min(n, max_panels);
    std::vector<double> breaks(n + 1);
    for (int i = 0; i <= n; ++i) breaks[i] = a + (b - a) * double(i) / n;
    return breaks;
}

} // namespace wavetail::quad
