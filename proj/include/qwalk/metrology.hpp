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

#include "qwalk/coin.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Probability below which a site is treated as outside the support.
inline constexpr double kSupportEpsilon = 1e-12;
/// Smallest QFI for which the FI/QFI ratio is defined.
inline constexpr double kRatioFloor = 1e-12;

/// 4 (<dpsi|dpsi> - |<dpsi|psi>|^2), clamped at zero.
double qfi_pure(const PairView& pair);
double qfi_pure(const DerivativePair& pair);

struct PositionFisher {
    double value = 0.0;
    /// Sites with p(x) < kSupportEpsilon whose amplitude derivative is not
    /// negligible; each contributes its continuous limit 4 |dpsi(x)|^2.
    int boundary_sites = 0;
    bool boundary_warning() const { return boundary_sites > 0; }
};

/// Classical Fisher information of a projective position measurement.
PositionFisher fi_position(const PairView& pair);
PositionFisher fi_position(const DerivativePair& pair);

/// F/H, or nullopt when H <= kRatioFloor.
std::optional<double> fi_qfi_ratio(double fi, double qfi);

/// Information about theta from information about theta~ = 2 arccos(theta):
/// multiplies by the squared Jacobian 4 / (1 - theta^2).
double reparametrized_qfi(double h_tilde, double theta);

/// Variance lower bound 1 / (measurements * information); infinite when the
/// information vanishes.
double cramer_rao_bound(double information, int measurements = 1);

inline constexpr double kDefaultFidelityStep = 1e-4;
/// Below this step the fidelity estimator is dominated by cancellation.
inline constexpr double kFidelityReliableStep = 1e-6;

struct FidelityQfi {
    double value = 0.0;
    bool reliable = true;
};

/// 8 (1 - |<psi_a|psi_b>|) / d^2 from two independent evolutions at
/// a = theta - d/2 and b = theta + d/2.
/// With richardson, combines steps d and d/2 to cancel the O(d^2) term.
FidelityQfi qfi_fidelity(const CoinFamily& family, double theta, const ProbeSpec& probe, int t,
                         double dtheta = kDefaultFidelityStep, bool richardson = false);

struct MetrologyReport {
    double theta = 0.0;
    int t = 0;
    double qfi = 0.0;
    double fi = 0.0;
    std::optional<double> ratio;
    double entropy = 0.0;
    /// Quantum Cramer-Rao bound for a single measurement.
    double crlb = 0.0;
    bool fi_boundary_warning = false;
};

MetrologyReport analyze(const PairView& pair, double theta, int t);
MetrologyReport analyze(const DerivativePair& pair, double theta);

} // namespace qwalk
