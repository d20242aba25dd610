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

#include "qwalk/types.hpp"

/// Inner loops of one walk step, U = S (1 (x) A), on a dense row-major grid of
/// shape rows x D. Each kernel comes in a serial reference form and an OpenMP
/// form; both produce bit-identical output because every target cell is
/// computed by exactly one iteration with the same arithmetic order.
namespace qwalk::kernels {

enum class Execution {
    serial,
    parallel,
    /// Parallel when the grid is large enough and no parallel region is active.
    automatic,
};

/// Geometry of a step: source rows [source_lo, source_hi] may be nonzero, and
/// targets [source_lo - max_shift, source_hi + max_shift] are overwritten.
struct StepRange {
    int source_lo = 0;
    int source_hi = 0;
    int max_shift = 0;
};

/// out = S (1 (x) A) in. A is D x D row-major.
void shift_coin_serial(std::span<const Complex> in, std::span<Complex> out, int dimension,
                       std::span<const int> shifts, std::span<const Complex> a, StepRange range);
void shift_coin_omp(std::span<const Complex> in, std::span<Complex> out, int dimension,
                    std::span<const int> shifts, std::span<const Complex> a, StepRange range);

/// psi_out = S (1 (x) C) psi and dpsi_out = S (1 (x) C) dpsi + S (1 (x) dC) psi.
void derivative_step_serial(std::span<const Complex> psi, std::span<const Complex> dpsi,
                            std::span<Complex> psi_out, std::span<Complex> dpsi_out, int dimension,
                            std::span<const int> shifts, std::span<const Complex> c,
                            std::span<const Complex> dc, StepRange range);
void derivative_step_omp(std::span<const Complex> psi, std::span<const Complex> dpsi,
                         std::span<Complex> psi_out, std::span<Complex> dpsi_out, int dimension,
                         std::span<const int> shifts, std::span<const Complex> c,
                         std::span<const Complex> dc, StepRange range);

/// Resolve automatic execution for a step touching target_rows x D cells.
Execution resolve(Execution requested, int target_rows, int dimension);

} // namespace qwalk::kernels
