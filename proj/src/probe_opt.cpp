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
#include "qwalk/probe_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <omp.h>

#include "qwalk/metrology.hpp"

namespace qwalk {
namespace {

double reflect_angle(double a) {
    double r = std::fmod(std::abs(a), kTwoPi);
    if (r > kPi)
        r = kTwoPi - r;
    return std::clamp(r, 0.0, kPi);
}

double wrap_phase(double g) {
    double r = std::fmod(g, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    if (r >= kTwoPi)
        r = 0.0;
    return r;
}

bool should_parallelize(Execution exec) {
    if (exec == Execution::serial)
        return false;
    if (exec == Execution::parallel)
        return true;
    return !omp_in_parallel() && omp_get_max_threads() > 1;
}

std::vector<double> random_coordinates(int dimension, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, kPi), phase(0.0, kTwoPi);
    std::vector<double> out;
    for (int i = 0; i < dimension - 1; ++i)
        out.push_back(angle(rng));
    for (int i = 0; i < dimension - 1; ++i)
        out.push_back(phase(rng));
    return out;
}

} // namespace

std::string to_string(Objective objective) { return objective == Objective::qfi ? "qfi" : "fi"; }

ProbeObjective::ProbeObjective(const ProbeProblem& problem) : problem_(problem), coin_(problem.family.at(problem.theta)) {
    if (problem.t < 1)
        throw DomainError("optimization needs t >= 1");
}

double ProbeObjective::operator()(const ProbeSpec& probe) const {
    thread_local Propagator propagator;
    const std::vector<Complex> chi = make_probe(probe);
    propagator.run(coin_, chi, problem_.t);
    if (problem_.objective == Objective::qfi)
        return qfi_pure(propagator.view());
    return fi_position(propagator.view()).value;
}

double ProbeObjective::at_coordinates(std::span<const double> coordinates) const {
    return (*this)(fold_coordinates(problem_.family.dimension, coordinates));
}

ProbeSpec fold_coordinates(int dimension, std::span<const double> coordinates) {
    const std::size_t n = dimension - 1;
    if (coordinates.size() != 2 * n)
        throw DomainError("probe coordinate vector must have 2(D-1) entries");
    std::vector<double> angles(n), phases(n);
    for (std::size_t i = 0; i < n; ++i) {
        angles[i] = reflect_angle(coordinates[i]);
        phases[i] = wrap_phase(coordinates[n + i]);
    }
    return ProbeSpec(dimension, std::move(angles), std::move(phases));
}

Lattice default_lattice(int dimension) {
    switch (dimension) {
    case 2:
        return {21, 21};
    case 3:
        return {13, 12};
    case 4:
        return {7, 4};
    case 5:
        return {5, 2};
    default:
        return {5, 1};
    }
}

std::int64_t lattice_size(int dimension, const Lattice& lattice) {
    std::int64_t n = 1;
    for (int i = 0; i < dimension - 1; ++i)
        n *= static_cast<std::int64_t>(lattice.angle_points) * lattice.phase_points;
    return n;
}

ProbeSpec lattice_node(int dimension, const Lattice& lattice, std::int64_t index) {
    const int n = dimension - 1;
    std::vector<double> angles(n), phases(n);
    // Least significant digit is the last phase.
    for (int i = n - 1; i >= 0; --i) {
        const std::int64_t digit = index % lattice.phase_points;
        index /= lattice.phase_points;
        phases[i] = kTwoPi * static_cast<double>(digit) / lattice.phase_points;
    }
    for (int i = n - 1; i >= 0; --i) {
        const std::int64_t digit = index % lattice.angle_points;
        index /= lattice.angle_points;
        angles[i] = kPi * static_cast<double>(digit) / (lattice.angle_points - 1);
    }
    return ProbeSpec(dimension, std::move(angles), std::move(phases));
}

std::vector<double> evaluate_lattice(const ProbeObjective& objective, const Lattice& lattice, Execution exec) {
    const int dimension = objective.problem().family.dimension;
    const std::int64_t size = lattice_size(dimension, lattice);
    std::vector<double> values(static_cast<std::size_t>(size));
    if (should_parallelize(exec)) {
#pragma omp parallel for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < size; ++i)
            values[i] = objective(lattice_node(dimension, lattice, i));
    } else {
        for (std::int64_t i = 0; i < size; ++i)
            values[i] = objective(lattice_node(dimension, lattice, i));
    }
    return values;
}

OptimizationResult grid_search(const ProbeProblem& problem, const Lattice& lattice, Execution exec) {
    if (lattice.angle_points < 5)
        throw DomainError("lattice needs at least 5 angle points");
    if (lattice.phase_points < 1)
        throw DomainError("lattice needs at least 1 phase point");
    const ProbeObjective objective(problem);
    const std::vector<double> values = evaluate_lattice(objective, lattice, exec);
    const double top = *std::max_element(values.begin(), values.end());
    const double slack = kLatticeTieTolerance * std::max(1.0, std::abs(top));
    const auto pick = std::find_if(values.begin(), values.end(), [&](double v) { return v >= top - slack; });
    const std::int64_t index = pick - values.begin();

    OptimizationResult result;
    result.best_probe = lattice_node(problem.family.dimension, lattice, index);
    result.best_value = *pick;
    result.objective = problem.objective;
    result.evaluations = static_cast<std::int64_t>(values.size());
    result.grid_resolution = lattice.angle_points;
    result.phase_resolution = lattice.phase_points;
    result.converged = true;
    result.trajectory.push_back({static_cast<int>(index), *pick, result.best_probe.coordinates()});
    return result;
}

OptimizationResult refine(const ProbeProblem& problem, const ProbeSpec& start, const RefineOptions& options) {
    start.validate();
    const ProbeObjective objective(problem);
    const int dimension = problem.family.dimension;

    OptimizationResult result;
    result.objective = problem.objective;
    SimplexObserver observer;
    if (options.record_trajectory) {
        observer = [&](int evaluations, double best, std::span<const double> x) {
            if (result.trajectory.empty() || -best > result.trajectory.back().value)
                result.trajectory.push_back(
                    {evaluations, -best, fold_coordinates(dimension, x).coordinates()});
        };
    }
    const SimplexResult simplex = nelder_mead(
        [&](std::span<const double> x) { return -objective.at_coordinates(x); }, start.coordinates(),
        {options.initial_step, options.tolerance, options.max_evaluations}, observer);
    result.best_probe = fold_coordinates(dimension, simplex.best);
    result.best_value = -simplex.value;
    // Moves that gain no more than the tie tolerance keep the start.
    const double start_value = objective(start);
    if (result.best_value <= start_value + kLatticeTieTolerance * std::max(1.0, std::abs(start_value))) {
        result.best_probe = start;
        result.best_value = start_value;
    }
    result.evaluations = simplex.evaluations + 1;
    result.converged = simplex.converged;
    return result;
}

OptimizeOptions default_optimize_options(int dimension) {
    OptimizeOptions options;
    options.lattice = default_lattice(dimension);
    return options;
}

OptimizationResult optimize(const ProbeProblem& problem, const OptimizeOptions& options) {
    const OptimizationResult coarse = grid_search(problem, options.lattice, options.exec);
    const int dimension = problem.family.dimension;

    std::vector<ProbeSpec> starts{coarse.best_probe};
    std::mt19937_64 rng(options.seed);
    for (int i = 0; i < options.extra_starts; ++i)
        starts.push_back(fold_coordinates(dimension, random_coordinates(dimension, rng)));

    std::vector<OptimizationResult> refined(starts.size());
    const int count = static_cast<int>(starts.size());
    if (should_parallelize(options.exec)) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int i = 0; i < count; ++i)
            refined[i] = refine(problem, starts[i], options.refine);
    } else {
        for (int i = 0; i < count; ++i)
            refined[i] = refine(problem, starts[i], options.refine);
    }

    // The lattice node itself wins only when no refinement improved on it;
    // convergence is then that of the refinement started there.
    OptimizationResult best = coarse;
    best.converged = refined.front().converged;
    for (const OptimizationResult& r : refined) {
        best.evaluations += r.evaluations;
        if (r.best_value > best.best_value) {
            best.best_probe = r.best_probe;
            best.best_value = r.best_value;
            best.converged = r.converged;
            best.trajectory.insert(best.trajectory.end(), r.trajectory.begin(), r.trajectory.end());
        }
    }
    best.grid_resolution = options.lattice.angle_points;
    best.phase_resolution = options.lattice.phase_points;
    return best;
}

ProbeSpec optimal_probe_z(int dimension) {
    CoinIndexMap check(dimension);
    std::vector<double> angles(dimension - 1, 0.0), phases(dimension - 1, 0.0);
    angles[0] = kPi / 2.0;
    return ProbeSpec(dimension, std::move(angles), std::move(phases));
}

RotationPair parse_rotation_pair(const std::string& text) {
    if (text == "xz" || text == "zx")
        return RotationPair::xz;
    if (text == "xy" || text == "yx")
        return RotationPair::xy;
    if (text == "yz" || text == "zy")
        return RotationPair::yz;
    throw DomainError("unsupported rotation pair '" + text + "'");
}

ProbeSpec joint_optimal_probes_2d(RotationPair pair) {
    switch (pair) {
    case RotationPair::xz:
        return ProbeSpec(2, {kPi / 2.0}, {kPi / 2.0});
    case RotationPair::xy:
        return ProbeSpec(2, {0.0}, {0.0});
    case RotationPair::yz:
        return ProbeSpec(2, {kPi / 2.0}, {0.0});
    }
    throw DomainError("unsupported rotation pair");
}

OrthogonalityResidual orthogonality_residual(const CoinFamily& family, double theta, const ProbeSpec& probe, int t) {
    const CoinOperator coin = family.at(theta);
    const DerivativePair pair = simulate(coin, probe, t);
    const auto psi = pair.state.amplitudes();
    const auto dpsi = pair.dstate.amplitudes();
    Complex overlap{};
    for (std::size_t i = 0; i < psi.size(); ++i)
        overlap += std::conj(psi[i]) * dpsi[i];

    const std::vector<Complex> chi = make_probe(probe);
    const Eigen::Map<const Eigen::VectorXcd> phi(chi.data(), static_cast<Eigen::Index>(chi.size()));
    const Complex first = phi.dot((coin.matrix.adjoint() * coin.derivative) * phi);
    return {std::abs(overlap), std::abs(first)};
}

ThetaProbeMaximum maximize_over_theta(const CoinFamily& family, int t, std::span<const double> theta_grid,
                                      const Lattice& scan_lattice, const OptimizeOptions& options, int candidates) {
    if (theta_grid.empty())
        throw DomainError("theta grid must not be empty");
    std::vector<double> scan(theta_grid.size());
    for (std::size_t i = 0; i < theta_grid.size(); ++i)
        scan[i] = grid_search({family, theta_grid[i], t}, scan_lattice, options.exec).best_value;

    std::vector<std::size_t> order(theta_grid.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scan[a] > scan[b]; });
    order.resize(std::min<std::size_t>(order.size(), std::max(1, candidates)));

    ThetaProbeMaximum best;
    best.probe.best_value = -1.0;
    for (std::size_t i : order) {
        OptimizationResult r = optimize({family, theta_grid[i], t}, options);
        if (r.best_value > best.probe.best_value) {
            best.theta = theta_grid[i];
            best.probe = std::move(r);
        }
    }

    // Joint polish over (probe coordinates, theta).
    const int dimension = family.dimension;
    std::vector<double> start = best.probe.best_probe.coordinates();
    start.push_back(best.theta);
    const std::size_t n = start.size() - 1;
    auto objective = [&](std::span<const double> x) {
        const double theta = x[n];
        if (!family.admits(theta))
            return std::numeric_limits<double>::infinity();
        const ProbeObjective f({family, theta, t});
        return -f.at_coordinates(x.first(n));
    };
    const SimplexResult polish =
        nelder_mead(objective, start, {0.05, options.refine.tolerance, options.refine.max_evaluations});
    if (-polish.value > best.probe.best_value) {
        best.theta = polish.best[n];
        best.probe.best_probe = fold_coordinates(dimension, std::span<const double>(polish.best).first(n));
        best.probe.best_value = -polish.value;
        best.probe.converged = polish.converged;
    }
    best.probe.evaluations += polish.evaluations;
    return best;
}

} // namespace qwalk
