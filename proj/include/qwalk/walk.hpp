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

#include "qwalk/coin.hpp"
#include "qwalk/index_map.hpp"
#include "qwalk/kernels.hpp"
#include "qwalk/probe.hpp"

namespace qwalk {

using kernels::Execution;

struct DerivativePair;
class WalkState;

WalkState apply_shift_coin(const WalkState& state, const Matrix& a, Execution exec);
DerivativePair evolve_with_derivative(const DerivativePair& pair, const CoinOperator& coin, Execution exec);

/// Joint walker + coin amplitudes on the dense grid x in [-M t_max, M t_max],
/// stored row-major with one row of D coin amplitudes per site.
class WalkState {
  public:
    WalkState() = default;
    WalkState(int dimension, int horizon);

    int dimension() const { return dimension_; }
    int max_shift() const { return max_shift_; }
    int horizon() const { return horizon_; }
    /// Number of steps applied so far.
    int time() const { return time_; }
    int rows() const { return 2 * max_shift_ * horizon_ + 1; }
    int min_position() const { return -max_shift_ * horizon_; }
    int max_position() const { return max_shift_ * horizon_; }
    int row_of_position(int x) const { return x + max_shift_ * horizon_; }
    int position_of_row(int row) const { return row - max_shift_ * horizon_; }

    Complex amplitude(int x, int coin_row) const;
    Complex& amplitude(int x, int coin_row);

    std::span<const Complex> amplitudes() const { return cells_; }
    std::span<Complex> amplitudes() { return cells_; }
    std::span<const Complex> site(int x) const;

    double norm_squared() const;

  private:
    friend WalkState apply_shift_coin(const WalkState&, const Matrix&, Execution);
    friend DerivativePair evolve_with_derivative(const DerivativePair&, const CoinOperator&, Execution);

    int dimension_ = 0;
    int max_shift_ = 0;
    int horizon_ = 0;
    int time_ = 0;
    std::vector<Complex> cells_;
};

/// A state together with its unnormalized theta-derivative.
struct DerivativePair {
    WalkState state;
    WalkState dstate;
};

/// Non-owning view of a state and its derivative on a common grid.
struct PairView {
    int dimension = 0;
    int rows = 0;
    std::span<const Complex> psi;
    std::span<const Complex> dpsi;
};

PairView view(const DerivativePair& pair);

/// Walker at the origin with coin amplitudes from make_probe; t = 0.
WalkState initial_state(const ProbeSpec& probe, int horizon);
DerivativePair initial_pair(const ProbeSpec& probe, int horizon);

/// One step U = S (1 (x) C).
WalkState step(const WalkState& state, const CoinOperator& coin, Execution exec = Execution::serial);

/// S (1 (x) A) for an arbitrary D x D matrix; advances the step counter.
WalkState apply_shift_coin(const WalkState& state, const Matrix& a, Execution exec = Execution::serial);

/// dstate <- U dstate + (dU) state, then state <- U state.
DerivativePair evolve_with_derivative(const DerivativePair& pair, const CoinOperator& coin,
                                      Execution exec = Execution::serial);

/// Evolve probe for t steps under coin, tracking the derivative.
DerivativePair simulate(const CoinOperator& coin, const ProbeSpec& probe, int t);

/// p(x) indexed by grid row; sums to one for a normalized state.
std::vector<double> position_distribution(const WalkState& state);

/// Von Neumann entropy (nats) of the reduced coin state.
double entanglement_entropy(const WalkState& state);
/// Same, for a row-major rows x D amplitude grid.
double entanglement_entropy(std::span<const Complex> cells, int dimension);

/// Reusable buffers for repeated evolutions of the same shape. Not thread
/// safe; give each thread its own instance.
class Propagator {
  public:
    /// Prepare to evolve a probe under coin for up to horizon steps.
    void reset(const CoinOperator& coin, std::span<const Complex> chi, int horizon, bool track_derivative = true);
    void advance(Execution exec = Execution::serial);
    /// Run from the probe to step t.
    void run(const CoinOperator& coin, std::span<const Complex> chi, int t, bool track_derivative = true);

    int time() const { return time_; }
    int dimension() const { return dimension_; }
    int rows() const { return rows_; }
    /// Grid row of position zero.
    int origin_row() const { return max_shift_ * horizon_; }
    std::span<const Complex> psi() const { return psi_; }
    std::span<const Complex> dpsi() const { return dpsi_; }
    PairView view() const { return {dimension_, rows_, psi_, dpsi_}; }

  private:
    int dimension_ = 0;
    int max_shift_ = 0;
    int horizon_ = 0;
    int rows_ = 0;
    int time_ = 0;
    bool track_derivative_ = true;
    std::vector<int> shifts_;
    std::vector<Complex> coin_;
    std::vector<Complex> dcoin_;
    std::vector<Complex> psi_, dpsi_, psi_next_, dpsi_next_;
};

/// Row-major copy of an Eigen matrix for the step kernels.
std::vector<Complex> row_major(const Matrix& m);

} // namespace qwalk
