// Copyright 2026 The qwalk Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qwalk {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

enum class Axis { x, y, z };

std::string to_string(Axis axis);
Axis parse_axis(const std::string& text);

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Coin dimension outside the range an operation accepts.
class InvalidDimension : public Error {
  public:
    using Error::Error;
};

/// Coin dimension the family is not defined for (Grover coins beyond D = 3).
class UnsupportedDimension : public Error {
  public:
    using Error::Error;
};

/// Real argument outside its mathematical domain.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Walk advanced past the horizon its grid was allocated for.
class CapacityError : public Error {
  public:
    using Error::Error;
};

} // namespace qwalk
