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

#include <span>
#include <vector>

#include "qwalk/types.hpp"

namespace qwalk {

/// Pure coin state on the generalized Bloch hypersphere: D-1 polar angles in
/// [0, pi] and D-1 relative phases in [0, 2 pi].
struct ProbeSpec {
    int dimension = 2;
    std::vector<double> angles;
    std::vector<double> phases;

    ProbeSpec() = default;
    ProbeSpec(int dimension, std::vector<double> angles, std::vector<double> phases);

    /// All angles and phases zero: the lowest-shift basis state.
    static ProbeSpec basis_lowest(int dimension);
    /// Build from the flat layout (angles..., phases...).
    static ProbeSpec from_coordinates(int dimension, std::span<const double> coordinates);
    std::vector<double> coordinates() const;

    /// Throws DomainError when a parameter is outside its range.
    void validate() const;

    bool operator==(const ProbeSpec&) const = default;
};

/// Coin amplitudes over the coin rows (ascending shift order).
std::vector<Complex> make_probe(const ProbeSpec& spec);

} // namespace qwalk
