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

#include <cstddef>

namespace qwalk {

/// Pairwise (cascade) summation of term(i) for i in [begin, end). The
/// reduction tree depends only on the range, so results are reproducible
/// regardless of how the terms were produced.
template <class Term>
auto pairwise_sum(std::size_t begin, std::size_t end, const Term& term) -> decltype(term(begin)) {
    using Value = decltype(term(begin));
    constexpr std::size_t kLeaf = 16;
    if (end - begin <= kLeaf) {
        Value acc{};
        for (std::size_t i = begin; i < end; ++i)
            acc += term(i);
        return acc;
    }
    const std::size_t mid = begin + (end - begin) / 2;
    return pairwise_sum(begin, mid, term) + pairwise_sum(mid, end, term);
}

} // namespace qwalk
