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

#include <vector>

namespace qwalk {

/// Bookkeeping between coin matrix rows, spin projections and position shifts.
///
/// Row k of every coin matrix addresses the k-th coin state in ascending shift
/// order. For odd D the shifts are -s..s; for even D the zero shift is skipped
/// and the shifts are -(s+1/2)..-1, 1..(s+1/2).
class CoinIndexMap {
  public:
    explicit CoinIndexMap(int dimension);

    int dimension() const { return dimension_; }
    double spin() const { return 0.5 * (dimension_ - 1); }
    /// Largest shift magnitude M.
    int max_shift() const { return shifts_.back(); }

    int shift(int row) const { return shifts_[row]; }
    /// Spin projection m_s = -s + row.
    double spin_projection(int row) const { return -spin() + row; }
    /// Row of the coin state with the given shift; -1 if the shift is absent.
    int row_of_shift(int shift) const;

    const std::vector<int>& shifts() const { return shifts_; }

  private:
    int dimension_;
    std::vector<int> shifts_;
};

} // namespace qwalk
