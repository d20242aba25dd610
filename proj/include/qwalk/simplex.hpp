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

#include <functional>
#include <span>
#include <vector>

namespace qwalk {

struct SimplexOptions {
    /// Edge length of the initial axis-aligned simplex.
    double initial_step = 0.1;
    /// Converged once every vertex lies within this max-norm distance of the best.
    double tolerance = 1e-8;
    int max_evaluations = 20000;
};

struct SimplexResult {
    std::vector<double> best;
    double value = 0.0;
    int evaluations = 0;
    int iterations = 0;
    bool converged = false;
};

using SimplexObserver = std::function<void(int evaluations, double best_value, std::span<const double> best)>;

/// Nelder-Mead downhill simplex minimization. The start vertex stays the best
/// vertex unless some point is strictly lower, so an optimal start is returned
/// unchanged.
SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> start,
                          const SimplexOptions& options = {}, const SimplexObserver& observer = {});

} // namespace qwalk
