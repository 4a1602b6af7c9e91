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

#include <stdexcept>
#include <string>

namespace wavetail {

/// Base class for every error raised by the numerical kernels.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inputs outside a routine's supported range (bad order, pole hit, ...).
class domain_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

/// An adaptive scheme exhausted its refinement budget before reaching
/// the requested tolerance.  The message reports the achieved tolerance.
class budget_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

/// Two independent evaluation routes for the same quantity disagree.
class crosscheck_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

/// A sample set handed to a fitting routine cannot constrain the model
/// (too few points, too narrow a span, zero values).
class degenerate_samples_error : public domain_error {
public:
    using domain_error::domain_error;
};

} // namespace wavetail
