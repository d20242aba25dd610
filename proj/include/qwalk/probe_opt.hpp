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

#include <cstdint>
#include <span>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/probe.hpp"
#include "qwalk/simplex.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

enum class Objective { qfi, fi };

std::string to_string(Objective objective);

/// A coin family at fixed theta, a step count and the figure of merit to maximize.
struct ProbeProblem {
    CoinFamily family;
    double theta = 0.0;
    int t = 1;
    Objective objective = Objective::qfi;
};

/// Objective over probes, evaluated by full evolution. The coin is built
/// once; calls are safe from concurrent threads.
class ProbeObjective {
  public:
    explicit ProbeObjective(const ProbeProblem& problem);
    double operator()(const ProbeSpec& probe) const;
    /// Evaluate at unconstrained coordinates, folded into the probe ranges.
    double at_coordinates(std::span<const double> coordinates) const;
    const ProbeProblem& problem() const { return problem_; }

  private:
    ProbeProblem problem_;
    CoinOperator coin_;
};

/// Fold unconstrained coordinates into probe ranges: angles are reflected
/// into [0, pi] and phases wrapped into [0, 2 pi).
ProbeSpec fold_coordinates(int dimension, std::span<const double> coordinates);

/// Uniform lattice: angle_points nodes on [0, pi] (endpoints included) and
/// phase_points nodes on [0, 2 pi) per coordinate.
struct Lattice {
    int angle_points = 21;
    int phase_points = 21;
};

/// Default lattice keeping the node count near 2e5 at most.
Lattice default_lattice(int dimension);
std::int64_t lattice_size(int dimension, const Lattice& lattice);
/// Node in lexicographic (angles..., phases...) order, first angle most significant.
ProbeSpec lattice_node(int dimension, const Lattice& lattice, std::int64_t index);

/// Objective at every lattice node, in node order. The serial and parallel
/// forms return identical vectors.
std::vector<double> evaluate_lattice(const ProbeObjective& objective, const Lattice& lattice, Execution exec);

struct TrajectoryPoint {
    int evaluation = 0;
    double value = 0.0;
    std::vector<double> coordinates;
};

struct OptimizationResult {
    ProbeSpec best_probe;
    double best_value = 0.0;
    Objective objective = Objective::qfi;
    std::int64_t evaluations = 0;
    int grid_resolution = 0;
    int phase_resolution = 0;
    bool converged = false;
    std::vector<TrajectoryPoint> trajectory;
};

/// Relative slack under which two lattice values count as tied; ties go to
/// the lexicographically smallest node.
inline constexpr double kLatticeTieTolerance = 1e-12;

/// Exhaustive lattice search. Requires lattice.angle_points >= 5.
OptimizationResult grid_search(const ProbeProblem& problem, const Lattice& lattice,
                               Execution exec = Execution::automatic);

struct RefineOptions {
    double initial_step = 0.2;
    double tolerance = 1e-8;
    int max_evaluations = 40000;
    bool record_trajectory = false;
};

/// Nelder-Mead ascent from start. converged = false when the evaluation
/// budget ran out; the best point so far is still returned.
OptimizationResult refine(const ProbeProblem& problem, const ProbeSpec& start, const RefineOptions& options = {});

struct OptimizeOptions {
    Lattice lattice;
    /// Random multi-start points in addition to the lattice argmax.
    int extra_starts = 2;
    std::uint64_t seed = 0;
    RefineOptions refine;
    Execution exec = Execution::automatic;
};

OptimizeOptions default_optimize_options(int dimension);

/// Lattice search followed by multi-start refinement. Deterministic for a
/// given seed.
OptimizationResult optimize(const ProbeProblem& problem, const OptimizeOptions& options);

/// Equal superposition of the extreme-shift coin states.
ProbeSpec optimal_probe_z(int dimension);

enum class RotationPair { xz, xy, yz };
RotationPair parse_rotation_pair(const std::string& text);

/// D = 2 probes maximizing the QFI of two rotation encodings at once.
ProbeSpec joint_optimal_probes_2d(RotationPair pair);

struct OrthogonalityResidual {
    /// |<psi(t)|dpsi(t)>|
    double overlap = 0.0;
    /// |<phi|C^dagger dC|phi>|, the single-step criterion.
    double first_step = 0.0;
};

OrthogonalityResidual orthogonality_residual(const CoinFamily& family, double theta, const ProbeSpec& probe, int t);

struct ThetaProbeMaximum {
    double theta = 0.0;
    OptimizationResult probe;
};

/// Maximize the objective jointly over theta and probe. A coarse lattice
/// scans theta_grid; the best candidates get a full optimize, then a joint
/// simplex over (theta, probe) polishes the winner.
ThetaProbeMaximum maximize_over_theta(const CoinFamily& family, int t, std::span<const double> theta_grid,
                                      const Lattice& scan_lattice, const OptimizeOptions& options,
                                      int candidates = 2);

} // namespace qwalk
