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
#include <vector>

#include "config.hpp"
#include "table.hpp"

namespace qwalk::cli {

/// One row per (theta, t) in config order: metrology report plus the probe
/// used. With probe.mode = optimize each cell is optimized independently.
Table run_sweep(const ExperimentConfig& config);

struct OptimizeOutput {
    Table results;
    /// Simplex progress of every cell, empty unless requested.
    Table trajectory;
};

OptimizeOutput run_optimize(const ExperimentConfig& config);

const std::vector<std::string>& figure_ids();

struct FigureSettings {
    /// Non-positive values select the figure default.
    int t_max = 0;
    int theta_count = 0;
    Axis axis = Axis::y;
};

/// Data behind one figure panel. Throws ConfigError for an unknown id.
Table figure_table(const std::string& id, const FigureSettings& settings);

} // namespace qwalk::cli
