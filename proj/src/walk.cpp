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
#include "qwalk/walk.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/numerics.hpp"

namespace qwalk {
namespace {

void require_horizon(int horizon) {
    if (horizon < 1)
        throw DomainError("walk horizon must be >= 1, got " + std::to_string(horizon));
}

void require_room(const WalkState& state) {
    if (state.time() >= state.horizon())
        throw CapacityError("walk already at its horizon of " + std::to_string(state.horizon()) + " steps");
}

void require_matching(const WalkState& state, int dimension) {
    if (dimension != state.dimension())
        throw InvalidDimension("coin dimension " + std::to_string(dimension) + " does not match walk dimension " +
                               std::to_string(state.dimension()));
}

kernels::StepRange range_at(int origin_row, int max_shift, int time) {
    return {origin_row - max_shift * time, origin_row + max_shift * time, max_shift};
}

} // namespace

std::vector<Complex> row_major(const Matrix& m) {
    std::vector<Complex> out(static_cast<std::size_t>(m.rows() * m.cols()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            out[static_cast<std::size_t>(r * m.cols() + c)] = m(r, c);
    return out;
}

WalkState::WalkState(int dimension, int horizon) : dimension_(dimension), horizon_(horizon) {
    require_horizon(horizon);
    max_shift_ = CoinIndexMap(dimension).max_shift();
    cells_.assign(static_cast<std::size_t>(rows()) * dimension_, Complex{});
}

Complex WalkState::amplitude(int x, int coin_row) const {
    return cells_[static_cast<std::size_t>(row_of_position(x)) * dimension_ + coin_row];
}

Complex& WalkState::amplitude(int x, int coin_row) {
    return cells_[static_cast<std::size_t>(row_of_position(x)) * dimension_ + coin_row];
}

std::span<const Complex> WalkState::site(int x) const {
    return std::span<const Complex>(cells_).subspan(static_cast<std::size_t>(row_of_position(x)) * dimension_,
                                                    dimension_);
}

double WalkState::norm_squared() const {
    return pairwise_sum(0, cells_.size(), [&](std::size_t i) { return std::norm(cells_[i]); });
}

PairView view(const DerivativePair& pair) {
    return {pair.state.dimension(), pair.state.rows(), pair.state.amplitudes(), pair.dstate.amplitudes()};
}

WalkState initial_state(const ProbeSpec& probe, int horizon) {
    require_horizon(horizon);
    const std::vector<Complex> chi = make_probe(probe);
    WalkState state(probe.dimension, horizon);
    for (int k = 0; k < probe.dimension; ++k)
        state.amplitude(0, k) = chi[k];
    return state;
}

DerivativePair initial_pair(const ProbeSpec& probe, int horizon) {
    WalkState state = initial_state(probe, horizon);
    WalkState dstate(probe.dimension, horizon);
    return {std::move(state), std::move(dstate)};
}

WalkState apply_shift_coin(const WalkState& state, const Matrix& a, Execution exec) {
    require_room(state);
    require_matching(state, static_cast<int>(a.rows()));
    const CoinIndexMap index(state.dimension());
    const std::vector<Complex> flat = row_major(a);
    WalkState out = state;
    const auto range = range_at(state.row_of_position(0), state.max_shift(), state.time());
    const int targets = range.source_hi - range.source_lo + 1 + 2 * range.max_shift;
    if (kernels::resolve(exec, targets, state.dimension()) == Execution::parallel)
        kernels::shift_coin_omp(state.amplitudes(), out.cells_, state.dimension(), index.shifts(), flat, range);
    else
        kernels::shift_coin_serial(state.amplitudes(), out.cells_, state.dimension(), index.shifts(), flat, range);
    out.time_ = state.time() + 1;
    return out;
}

WalkState step(const WalkState& state, const CoinOperator& coin, Execution exec) {
    return apply_shift_coin(state, coin.matrix, exec);
}

DerivativePair evolve_with_derivative(const DerivativePair& pair, const CoinOperator& coin, Execution exec) {
    const WalkState& state = pair.state;
    require_room(state);
    require_matching(state, coin.dimension);
    const CoinIndexMap index(state.dimension());
    const std::vector<Complex> c = row_major(coin.matrix);
    const std::vector<Complex> dc = row_major(coin.derivative);
    DerivativePair out = pair;
    const auto range = range_at(state.row_of_position(0), state.max_shift(), state.time());
    const int targets = range.source_hi - range.source_lo + 1 + 2 * range.max_shift;
    if (kernels::resolve(exec, targets, state.dimension()) == Execution::parallel)
        kernels::derivative_step_omp(state.amplitudes(), pair.dstate.amplitudes(), out.state.cells_,
                                     out.dstate.cells_, state.dimension(), index.shifts(), c, dc, range);
    else
        kernels::derivative_step_serial(state.amplitudes(), pair.dstate.amplitudes(), out.state.cells_,
                                        out.dstate.cells_, state.dimension(), index.shifts(), c, dc, range);
    out.state.time_ = state.time() + 1;
    out.dstate.time_ = state.time() + 1;
    return out;
}

DerivativePair simulate(const CoinOperator& coin, const ProbeSpec& probe, int t) {
    if (t < 0)
        throw DomainError("number of steps must be >= 0");
    DerivativePair pair = initial_pair(probe, std::max(t, 1));
    for (int k = 0; k < t; ++k)
        pair = evolve_with_derivative(pair, coin);
    return pair;
}

std::vector<double> position_distribution(const WalkState& state) {
    const int d = state.dimension();
    std::vector<double> p(state.rows(), 0.0);
    const auto cells = state.amplitudes();
    for (int r = 0; r < state.rows(); ++r) {
        double acc = 0.0;
        for (int k = 0; k < d; ++k)
            acc += std::norm(cells[static_cast<std::size_t>(r) * d + k]);
        p[r] = acc;
    }
    return p;
}

double entanglement_entropy(const WalkState& state) {
    return entanglement_entropy(state.amplitudes(), state.dimension());
}

double entanglement_entropy(std::span<const Complex> cells, int dimension) {
    const int d = dimension;
    const std::size_t rows = cells.size() / static_cast<std::size_t>(d);
    Matrix rho = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j)
        for (int k = j; k < d; ++k) {
            const Complex v = pairwise_sum(0, rows, [&](std::size_t r) {
                return cells[r * d + j] * std::conj(cells[r * d + k]);
            });
            rho(j, k) = v;
            rho(k, j) = std::conj(v);
        }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(rho, Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (int k = 0; k < d; ++k) {
        const double lambda = eig.eigenvalues()(k);
        if (lambda > 1e-300)
            entropy -= lambda * std::log(lambda);
    }
    return std::max(entropy, 0.0);
}

void Propagator::reset(const CoinOperator& coin, std::span<const Complex> chi, int horizon, bool track_derivative) {
    require_horizon(horizon);
    if (static_cast<int>(chi.size()) != coin.dimension)
        throw InvalidDimension("probe and coin dimensions differ");
    const CoinIndexMap index(coin.dimension);
    dimension_ = coin.dimension;
    max_shift_ = index.max_shift();
    horizon_ = horizon;
    rows_ = 2 * max_shift_ * horizon + 1;
    time_ = 0;
    track_derivative_ = track_derivative;
    shifts_ = index.shifts();
    coin_ = row_major(coin.matrix);
    dcoin_ = row_major(coin.derivative);
    const std::size_t cells = static_cast<std::size_t>(rows_) * dimension_;
    for (auto* buffer : {&psi_, &dpsi_, &psi_next_, &dpsi_next_})
        buffer->assign(cells, Complex{});
    std::copy(chi.begin(), chi.end(), psi_.begin() + static_cast<std::ptrdiff_t>(origin_row()) * dimension_);
}

void Propagator::advance(Execution exec) {
    if (time_ >= horizon_)
        throw CapacityError("propagator already at its horizon of " + std::to_string(horizon_) + " steps");
    const auto range = range_at(origin_row(), max_shift_, time_);
    const int targets = range.source_hi - range.source_lo + 1 + 2 * range.max_shift;
    const bool parallel = kernels::resolve(exec, targets, dimension_) == Execution::parallel;
    if (track_derivative_) {
        if (parallel)
            kernels::derivative_step_omp(psi_, dpsi_, psi_next_, dpsi_next_, dimension_, shifts_, coin_, dcoin_,
                                         range);
        else
            kernels::derivative_step_serial(psi_, dpsi_, psi_next_, dpsi_next_, dimension_, shifts_, coin_, dcoin_,
                                            range);
        dpsi_.swap(dpsi_next_);
    } else if (parallel) {
        kernels::shift_coin_omp(psi_, psi_next_, dimension_, shifts_, coin_, range);
    } else {
        kernels::shift_coin_serial(psi_, psi_next_, dimension_, shifts_, coin_, range);
    }
    psi_.swap(psi_next_);
    ++time_;
}

void Propagator::run(const CoinOperator& coin, std::span<const Complex> chi, int t, bool track_derivative) {
    reset(coin, chi, std::max(t, 1), track_derivative);
    for (int k = 0; k < t; ++k)
        advance();
}

} // namespace qwalk
