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
#include "qwalk/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qwalk {
namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

} // namespace

SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> start,
                          const SimplexOptions& options, const SimplexObserver& observer) {
    const std::size_t n = start.size();
    SimplexResult result;
    std::vector<std::vector<double>> vertex(n + 1, start);
    std::vector<double> value(n + 1);
    for (std::size_t i = 0; i < n; ++i)
        vertex[i + 1][i] += options.initial_step;

    auto eval = [&](const std::vector<double>& x) {
        ++result.evaluations;
        return f(x);
    };
    for (std::size_t i = 0; i <= n; ++i)
        value[i] = eval(vertex[i]);

    std::vector<std::size_t> order(n + 1);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> centroid(n), trial(n), trial2(n);

    auto sort_vertices = [&] {
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
    };
    auto diameter = [&] {
        const auto& best = vertex[order[0]];
        double d = 0.0;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d = std::max(d, std::abs(vertex[order[i]][j] - best[j]));
        return d;
    };
    // Replace the worst vertex; it keeps the worst slot in order so ties never
    // displace an earlier vertex.
    auto replace_worst = [&](const std::vector<double>& x, double v) {
        vertex[order[n]] = x;
        value[order[n]] = v;
    };

    sort_vertices();
    while (true) {
        if (observer)
            observer(result.evaluations, value[order[0]], vertex[order[0]]);
        if (n == 0 || diameter() < options.tolerance) {
            result.converged = true;
            break;
        }
        if (result.evaluations >= options.max_evaluations)
            break;
        ++result.iterations;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                centroid[j] += vertex[order[i]][j];
        for (double& c : centroid)
            c /= static_cast<double>(n);

        const auto& worst = vertex[order[n]];
        const double f_best = value[order[0]];
        const double f_second = value[order[n - 1]];
        const double f_worst = value[order[n]];

        for (std::size_t j = 0; j < n; ++j)
            trial[j] = centroid[j] + kReflect * (centroid[j] - worst[j]);
        const double f_reflect = eval(trial);

        if (f_reflect < f_best) {
            for (std::size_t j = 0; j < n; ++j)
                trial2[j] = centroid[j] + kExpand * (trial[j] - centroid[j]);
            const double f_expand = eval(trial2);
            if (f_expand < f_reflect)
                replace_worst(trial2, f_expand);
            else
                replace_worst(trial, f_reflect);
        } else if (f_reflect < f_second) {
            replace_worst(trial, f_reflect);
        } else {
            const bool outside = f_reflect < f_worst;
            for (std::size_t j = 0; j < n; ++j)
                trial2[j] = outside ? centroid[j] + kContract * (trial[j] - centroid[j])
                                    : centroid[j] + kContract * (worst[j] - centroid[j]);
            const double f_contract = eval(trial2);
            if (f_contract < std::min(f_reflect, f_worst)) {
                replace_worst(trial2, f_contract);
            } else {
                const auto& best = vertex[order[0]];
                for (std::size_t i = 1; i <= n; ++i) {
                    auto& v = vertex[order[i]];
                    for (std::size_t j = 0; j < n; ++j)
                        v[j] = best[j] + kShrink * (v[j] - best[j]);
                    value[order[i]] = eval(v);
                }
            }
        }
        sort_vertices();
    }
    result.best = vertex[order[0]];
    result.value = value[order[0]];
    return result;
}

} // namespace qwalk
