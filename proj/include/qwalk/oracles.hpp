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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/probe.hpp"

/// Closed-form results for walks with rotation and Grover coins. Every
/// function here evaluates a printed formula directly and never runs the
/// walk, so it can serve as an independent check of the simulator.
namespace qwalk::oracles {

/// z-rotation QFI for any D: 4 t^2 Var(m_s) in the probe distribution.
double qfi_z_general(int dimension, std::span<const Complex> chi, int t);

/// Embedded z-rotation QFI: t^2 [a + b - (a - b)^2], a, b the weights on the
/// extreme coin states.
double qfi_embedded_z(int dimension, std::span<const Complex> chi, int t);

enum class SmallZCase { d2, embedded3, d4 };

/// Closed forms in hypersphere angles for D = 2, the embedded D = 3 rotation
/// and D = 4.
double qfi_z_closed_small_D(SmallZCase which, std::span<const double> angles, int t);

enum class XyTag { limit0, pi_even, pi_odd };

/// D = 2 x- or y-rotation QFI at theta -> 0 and theta = pi (even or odd t).
double qfi_xy2_special(Axis axis, XyTag tag, double alpha1, double gamma1, int t);

enum class XyQuantity { limit0_max, max_over_theta };

/// Maximum QFI over probes for x/y rotations, D = 2, 3, 4.
double qfi_xy_scaling(int dimension, XyQuantity quantity, int t);

/// Long-time limit of max_probe H / t^2.
double asymptotic_qfi_rate(Axis axis, int dimension);

struct ParthasarathyMinimum {
    double min_overlap_sq = 1.0;
    /// Coin shifts of the eigenvector pair reaching the minimum.
    int lower_shift = 0;
    int upper_shift = 0;
};

/// min over unit coin states of |<phi|W|phi>|^2, W = exp(i t dtheta T_z),
/// via the two-eigenvalue characterization. Requires the eigenphase spread
/// to stay below pi.
ParthasarathyMinimum parthasarathy_min(int dimension, int t, double dtheta);

struct GroverShapeCheck {
    /// H (1 - theta^2)
    double scaled = 0.0;
    bool finite = false;
    /// Squared Jacobian 4 / (1 - theta^2) of theta~ = 2 arccos(theta).
    double jacobian_sq = 0.0;
    /// Theta-independent ceiling on the scaled QFI (D = 2: 4 t^2).
    std::optional<double> bound;
    /// 4 H_comp / (1 - theta^2) when the rotation-form QFI was supplied.
    std::optional<double> predicted;
    std::optional<double> relative_deviation;
};

GroverShapeCheck grover_qfi_shape(int dimension, double theta, int t, double h_sim,
                                  std::optional<double> h_rotation_form = std::nullopt);

enum class Quantity { qfi, fi, entropy };
std::string to_string(Quantity quantity);
std::string to_string(XyTag tag);

/// One row of the verification table: a walk scenario and its closed-form value.
struct OracleCase {
    std::string id;
    CoinFamily family;
    /// Theta used for the simulation. Limit cases are evaluated at 1e-5.
    double theta = 0.0;
    std::string theta_tag;
    int t = 1;
    ProbeSpec probe;
    std::string probe_description;
    Quantity quantity = Quantity::qfi;
    double expected = 0.0;
    double tolerance = 0.0;
    bool relative = true;
    std::string anchor;
};

inline constexpr double kLimitTheta = 1e-5;

std::vector<OracleCase> oracle_table();

/// Single-line JSON object for a case.
std::string to_json_line(const OracleCase& c);

} // namespace qwalk::oracles
