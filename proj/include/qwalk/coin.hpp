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

#include <string>

#include "qwalk/types.hpp"

namespace qwalk {

/// Distance from theta = 1 at which the generalized Grover family is clipped;
/// its derivative carries 1/sqrt(1 - theta^2).
inline constexpr double kGroverEdge = 1e-9;

enum class CoinKind {
    rotation,
    embedded_rotation_z,
    embedded_u2,
    grover,
    /// i R_y(theta) R_z(pi) in D = 2: the Grover coin in half-angle coordinates.
    grover_rotation_form,
};

std::string to_string(CoinKind kind);
CoinKind parse_coin_kind(const std::string& text);

/// Hermitian spin-s generator of rotations about one axis, s = (D-1)/2.
struct GeneratorSet {
    int dimension = 0;
    Axis axis = Axis::z;
    Matrix matrix;
};

/// A D x D unitary coin together with its analytic theta-derivative.
struct CoinOperator {
    int dimension = 0;
    CoinKind kind = CoinKind::rotation;
    Axis axis = Axis::z;
    double xi = 0.0;
    double zeta = 0.0;
    double theta = 0.0;
    Matrix matrix;
    Matrix derivative;
};

GeneratorSet spin_generators(int dimension, Axis axis);

/// exp(-i theta T_axis) via the eigendecomposition of T_axis.
CoinOperator rotation_coin(int dimension, Axis axis, double theta);

/// diag(e^{-i theta/2}, 1, ..., 1, e^{i theta/2}); requires D >= 3.
CoinOperator embedded_rotation_z(int dimension, double theta);

/// Euler-angle U(2) block acting on the lowest and highest coin rows. The
/// derivative is taken with xi and zeta held fixed.
CoinOperator embedded_u2_coin(int dimension, double xi, double theta, double zeta);

/// Generalized Grover coin for D = 2 or 3, theta in [0, 1 - kGroverEdge].
CoinOperator grover_coin(int dimension, double theta);

/// i R_y(theta) R_z(pi) for D = 2. Equals grover_coin(2, cos(theta / 2)).
CoinOperator grover_rotation_form(double theta);

/// Theta-independent description of a coin family.
struct CoinFamily {
    CoinKind kind = CoinKind::rotation;
    int dimension = 2;
    Axis axis = Axis::z;
    double xi = 0.0;
    double zeta = 0.0;

    static CoinFamily rotation(int dimension, Axis axis) { return {CoinKind::rotation, dimension, axis}; }
    static CoinFamily embedded_z(int dimension) { return {CoinKind::embedded_rotation_z, dimension, Axis::z}; }
    static CoinFamily embedded_u2(int dimension, double xi, double zeta) {
        return {CoinKind::embedded_u2, dimension, Axis::y, xi, zeta};
    }
    static CoinFamily grover(int dimension) { return {CoinKind::grover, dimension, Axis::z}; }
    static CoinFamily grover_rotation_form() { return {CoinKind::grover_rotation_form, 2, Axis::y}; }

    CoinOperator at(double theta) const;
    /// Whether at(theta) is defined.
    bool admits(double theta) const;
    std::string describe() const;
};

} // namespace qwalk
