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
#include "qwalk/probe.hpp"

#include <cmath>
#include <sstream>

#include "qwalk/index_map.hpp"

namespace qwalk {

ProbeSpec::ProbeSpec(int dim, std::vector<double> a, std::vector<double> g)
    : dimension(dim), angles(std::move(a)), phases(std::move(g)) {
    CoinIndexMap check(dimension);
    if (static_cast<int>(angles.size()) != dimension - 1 || static_cast<int>(phases.size()) != dimension - 1)
        throw DomainError("probe needs D-1 angles and D-1 phases");
}

ProbeSpec ProbeSpec::basis_lowest(int dimension) {
    return ProbeSpec(dimension, std::vector<double>(dimension - 1, 0.0), std::vector<double>(dimension - 1, 0.0));
}

ProbeSpec ProbeSpec::from_coordinates(int dimension, std::span<const double> coordinates) {
    const std::size_t n = dimension - 1;
    if (coordinates.size() != 2 * n)
        throw DomainError("probe coordinate vector must have 2(D-1) entries");
    return ProbeSpec(dimension, {coordinates.begin(), coordinates.begin() + n},
                     {coordinates.begin() + n, coordinates.end()});
}

std::vector<double> ProbeSpec::coordinates() const {
    std::vector<double> out(angles);
    out.insert(out.end(), phases.begin(), phases.end());
    return out;
}

void ProbeSpec::validate() const {
    CoinIndexMap check(dimension);
    if (static_cast<int>(angles.size()) != dimension - 1 || static_cast<int>(phases.size()) != dimension - 1)
        throw DomainError("probe needs D-1 angles and D-1 phases");
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (!(angles[i] >= 0.0 && angles[i] <= kPi)) {
            std::ostringstream msg;
            msg << "probe angle " << i + 1 << " = " << angles[i] << " outside [0, pi]";
            throw DomainError(msg.str());
        }
        if (!(phases[i] >= 0.0 && phases[i] <= kTwoPi)) {
            std::ostringstream msg;
            msg << "probe phase " << i + 1 << " = " << phases[i] << " outside [0, 2 pi]";
            throw DomainError(msg.str());
        }
    }
}

std::vector<Complex> make_probe(const ProbeSpec& spec) {
    spec.validate();
    const int d = spec.dimension;
    std::vector<double> half_sin(d - 1), half_cos(d - 1);
    for (int j = 0; j < d - 1; ++j) {
        half_sin[j] = std::sin(0.5 * spec.angles[j]);
        half_cos[j] = std::cos(0.5 * spec.angles[j]);
    }
    std::vector<Complex> chi(d);
    chi[0] = half_cos[0];

    double all_sines = 1.0;
    for (int j = 0; j < d - 1; ++j)
        all_sines *= half_sin[j];
    chi[1] = std::polar(all_sines, spec.phases[0]);

    // Row 1 + k carries the product of the first D-k sines and one cosine.
    for (int k = 2; k <= d - 1; ++k) {
        double weight = half_cos[d - k];
        for (int j = 0; j < d - k; ++j)
            weight *= half_sin[j];
        chi[k] = std::polar(weight, spec.phases[k - 1]);
    }
    return chi;
}

} // namespace qwalk
