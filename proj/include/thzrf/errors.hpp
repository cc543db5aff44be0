// SPDX-License-Identifier: Apache-2.0
//
// thzrf - performance analysis of mixed THz-RF dual-hop relay links
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef THZRF_ERRORS_HPP
#define THZRF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thzrf
{

/// Base class of every error thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical or model domain (NaN, x < 0, T outside the fit window, ...).
class DomainError : public Error
{
public:
    using Error::Error;
};

/// Integral or series that does not exist for the given arguments, e.g. Γ(a, 0) with a <= 0.
class DivergenceError : public Error
{
public:
    using Error::Error;
};

/// Structurally invalid parameter set (no separating contour, non-positive scale, ...).
class ParameterError : public Error
{
public:
    using Error::Error;
};

/// A valid model feature that this implementation does not cover (non-integer mu).
class UnsupportedParameterError : public Error
{
public:
    using Error::Error;
};

/// Iterative numerics gave up. Carries the best error estimate that was reached.
class ConvergenceError : public Error
{
public:
    ConvergenceError(const std::string &what, double achieved_error)
        : Error(what), achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

/// Malformed, incomplete or out-of-range configuration file.
class ConfigError : public Error
{
public:
    using Error::Error;
};

} // namespace thzrf

#endif
