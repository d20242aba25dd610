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
#include "qwalk/metrology.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "qwalk/numerics.hpp"

namespace qwalk {

double qfi_pure(const PairView& pair) {
    const std::size_t n = pair.psi.size();
    const double dd = pairwise_sum(0, n, [&](std::size_t i) { return std::norm(pair.dpsi[i]); });
    const Complex dp = pairwise_sum(0, n, [&](std::size_t i) { return std::conj(pair.dpsi[i]) * pair.psi[i]; });
    return std::max(0.0, 4.0 * (dd - std::norm(dp)));
}

double qfi_pure(const DerivativePair& pair) { return qfi_pure(view(pair)); }

PositionFisher fi_position(const PairView& pair) {
    const int d = pair.dimension;
    struct Term {
        double value = 0.0;
        int boundary = 0;
        Term& operator+=(const Term& o) {
            value += o.value;
            boundary += o.boundary;
            return *this;
        }
        Term operator+(const Term& o) const { return Term(*this) += o; }
    };
    const Term total = pairwise_sum(0, static_cast<std::size_t>(pair.rows), [&](std::size_t r) {
        double p = 0.0, dp = 0.0, dnorm = 0.0;
        for (int k = 0; k < d; ++k) {
            const Complex a = pair.psi[r * d + k];
            const Complex da = pair.dpsi[r * d + k];
            p += std::norm(a);
            dp += 2.0 * (std::conj(a) * da).real();
            dnorm += std::norm(da);
        }
        if (p >= kSupportEpsilon)
            return Term{dp * dp / p, 0};
        // At an isolated zero of psi(x) the ratio tends to 4 |dpsi(x)|^2.
        if (dnorm < kSupportEpsilon)
            return Term{};
        return Term{4.0 * dnorm, 1};
    });
    return {total.value, total.boundary};
}

PositionFisher fi_position(const DerivativePair& pair) { return fi_position(view(pair)); }

std::optional<double> fi_qfi_ratio(double fi, double qfi) {
    if (!(qfi > kRatioFloor))
        return std::nullopt;
    return fi / qfi;
}

double reparametrized_qfi(double h_tilde, double theta) {
    if (!(theta * theta < 1.0)) {
        std::ostringstream msg;
        msg << "reparametrization needs |theta| < 1, got " << theta;
        throw DomainError(msg.str());
    }
    return 4.0 * h_tilde / (1.0 - theta * theta);
}

double cramer_rao_bound(double information, int measurements) {
    if (measurements < 1)
        throw DomainError("measurement count must be >= 1");
    if (!(information > 0.0))
        return std::numeric_limits<double>::infinity();
    return 1.0 / (measurements * information);
}

namespace {

double overlap_magnitude(const CoinFamily& family, double theta_a, double theta_b, const ProbeSpec& probe, int t) {
    const std::vector<Complex> chi = make_probe(probe);
    Propagator a, b;
    a.run(family.at(theta_a), chi, t, false);
    b.run(family.at(theta_b), chi, t, false);
    const auto psi_a = a.psi();
    const auto psi_b = b.psi();
    const Complex ov =
        pairwise_sum(0, psi_a.size(), [&](std::size_t i) { return std::conj(psi_a[i]) * psi_b[i]; });
    return std::abs(ov);
}

double fidelity_estimate(const CoinFamily& family, double theta, const ProbeSpec& probe, int t, double dtheta) {
    // Symmetric placement cancels the odd terms of the overlap expansion.
    const double ov = overlap_magnitude(family, theta - 0.5 * dtheta, theta + 0.5 * dtheta, probe, t);
    return 8.0 * (1.0 - ov) / (dtheta * dtheta);
}

} // namespace

FidelityQfi qfi_fidelity(const CoinFamily& family, double theta, const ProbeSpec& probe, int t, double dtheta,
                         bool richardson) {
    if (!(dtheta > 0.0 && dtheta <= 1e-2)) {
        std::ostringstream msg;
        msg << "fidelity step must lie in (0, 1e-2], got " << dtheta;
        throw DomainError(msg.str());
    }
    if (!family.admits(theta - 0.5 * dtheta) || !family.admits(theta + 0.5 * dtheta)) {
        std::ostringstream msg;
        msg << "theta = " << theta << " +/- dtheta/2 must lie in the domain of " << family.describe();
        throw DomainError(msg.str());
    }
    FidelityQfi out;
    if (richardson) {
        const double coarse = fidelity_estimate(family, theta, probe, t, dtheta);
        const double fine = fidelity_estimate(family, theta, probe, t, 0.5 * dtheta);
        out.value = (4.0 * fine - coarse) / 3.0;
        out.reliable = 0.5 * dtheta >= kFidelityReliableStep;
    } else {
        out.value = fidelity_estimate(family, theta, probe, t, dtheta);
        out.reliable = dtheta >= kFidelityReliableStep;
    }
    return out;
}

MetrologyReport analyze(const PairView& pair, double theta, int t) {
    MetrologyReport report;
    report.theta = theta;
    report.t = t;
    report.qfi = qfi_pure(pair);
    const PositionFisher fi = fi_position(pair);
    report.fi = fi.value;
    report.fi_boundary_warning = fi.boundary_warning();
    report.ratio = fi_qfi_ratio(report.fi, report.qfi);
    report.entropy = entanglement_entropy(pair.psi, pair.dimension);
    report.crlb = cramer_rao_bound(report.qfi);
    return report;
}

MetrologyReport analyze(const DerivativePair& pair, double theta) { return analyze(view(pair), theta, pair.state.time()); }

} // namespace qwalk
