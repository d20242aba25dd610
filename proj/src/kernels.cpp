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
#include "qwalk/kernels.hpp"

#include <omp.h>

namespace qwalk::kernels {
namespace {

// Below this many multiply-adds per step thread start-up dominates.
constexpr long kParallelWorkThreshold = 1L << 15;

inline void shift_coin_row(const Complex* in, Complex* out, int dimension, const int* shifts, const Complex* a,
                           int target, const StepRange& range) {
    Complex* dst = out + static_cast<std::ptrdiff_t>(target) * dimension;
    for (int k = 0; k < dimension; ++k) {
        const int source = target - shifts[k];
        if (source < range.source_lo || source > range.source_hi) {
            dst[k] = Complex{};
            continue;
        }
        const Complex* src = in + static_cast<std::ptrdiff_t>(source) * dimension;
        const Complex* arow = a + static_cast<std::ptrdiff_t>(k) * dimension;
        Complex acc{};
        for (int j = 0; j < dimension; ++j)
            acc += arow[j] * src[j];
        dst[k] = acc;
    }
}

inline void derivative_row(const Complex* psi, const Complex* dpsi, Complex* psi_out, Complex* dpsi_out,
                           int dimension, const int* shifts, const Complex* c, const Complex* dc, int target,
                           const StepRange& range) {
    const std::ptrdiff_t base = static_cast<std::ptrdiff_t>(target) * dimension;
    for (int k = 0; k < dimension; ++k) {
        const int source = target - shifts[k];
        if (source < range.source_lo || source > range.source_hi) {
            psi_out[base + k] = Complex{};
            dpsi_out[base + k] = Complex{};
            continue;
        }
        const std::ptrdiff_t src = static_cast<std::ptrdiff_t>(source) * dimension;
        const Complex* crow = c + static_cast<std::ptrdiff_t>(k) * dimension;
        const Complex* dcrow = dc + static_cast<std::ptrdiff_t>(k) * dimension;
        Complex value{}, deriv{};
        for (int j = 0; j < dimension; ++j) {
            value += crow[j] * psi[src + j];
            deriv += crow[j] * dpsi[src + j] + dcrow[j] * psi[src + j];
        }
        psi_out[base + k] = value;
        dpsi_out[base + k] = deriv;
    }
}

} // namespace

void shift_coin_serial(std::span<const Complex> in, std::span<Complex> out, int dimension,
                       std::span<const int> shifts, std::span<const Complex> a, StepRange range) {
    const int lo = range.source_lo - range.max_shift;
    const int hi = range.source_hi + range.max_shift;
    for (int target = lo; target <= hi; ++target)
        shift_coin_row(in.data(), out.data(), dimension, shifts.data(), a.data(), target, range);
}

void shift_coin_omp(std::span<const Complex> in, std::span<Complex> out, int dimension,
                    std::span<const int> shifts, std::span<const Complex> a, StepRange range) {
    const int lo = range.source_lo - range.max_shift;
    const int hi = range.source_hi + range.max_shift;
#pragma omp parallel for schedule(static)
    for (int target = lo; target <= hi; ++target)
        shift_coin_row(in.data(), out.data(), dimension, shifts.data(), a.data(), target, range);
}

void derivative_step_serial(std::span<const Complex> psi, std::span<const Complex> dpsi,
                            std::span<Complex> psi_out, std::span<Complex> dpsi_out, int dimension,
                            std::span<const int> shifts, std::span<const Complex> c,
                            std::span<const Complex> dc, StepRange range) {
    const int lo = range.source_lo - range.max_shift;
    const int hi = range.source_hi + range.max_shift;
    for (int target = lo; target <= hi; ++target)
        derivative_row(psi.data(), dpsi.data(), psi_out.data(), dpsi_out.data(), dimension, shifts.data(),
                       c.data(), dc.data(), target, range);
}

void derivative_step_omp(std::span<const Complex> psi, std::span<const Complex> dpsi,
                         std::span<Complex> psi_out, std::span<Complex> dpsi_out, int dimension,
                         std::span<const int> shifts, std::span<const Complex> c,
                         std::span<const Complex> dc, StepRange range) {
    const int lo = range.source_lo - range.max_shift;
    const int hi = range.source_hi + range.max_shift;
#pragma omp parallel for schedule(static)
    for (int target = lo; target <= hi; ++target)
        derivative_row(psi.data(), dpsi.data(), psi_out.data(), dpsi_out.data(), dimension, shifts.data(),
                       c.data(), dc.data(), target, range);
}

Execution resolve(Execution requested, int target_rows, int dimension) {
    if (requested != Execution::automatic)
        return requested;
    if (omp_in_parallel() || omp_get_max_threads() < 2)
        return Execution::serial;
    const long work = static_cast<long>(target_rows) * dimension * dimension;
    return work >= kParallelWorkThreshold ? Execution::parallel : Execution::serial;
}

} // namespace qwalk::kernels
