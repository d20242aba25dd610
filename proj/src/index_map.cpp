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
#include "qwalk/index_map.hpp"

#include <algorithm>

#include "qwalk/types.hpp"

namespace qwalk {

CoinIndexMap::CoinIndexMap(int dimension) : dimension_(dimension) {
    if (dimension < 2)
        throw InvalidDimension("coin dimension must be >= 2, got " + std::to_string(dimension));
    shifts_.reserve(dimension);
    const int half = dimension / 2;
    if (dimension % 2 == 1) {
        for (int m = -half; m <= half; ++m)
            shifts_.push_back(m);
    } else {
        for (int m = -half; m <= half; ++m)
            if (m != 0)
                shifts_.push_back(m);
    }
}

int CoinIndexMap::row_of_shift(int shift) const {
    const auto it = std::find(shifts_.begin(), shifts_.end(), shift);
    return it == shifts_.end() ? -1 : static_cast<int>(it - shifts_.begin());
}

std::string to_string(Axis axis) {
    switch (axis) {
    case Axis::x:
        return "x";
    case Axis::y:
        return "y";
    case Axis::z:
        return "z";
    }
    return "?";
}

Axis parse_axis(const std::string& text) {
    if (text == "x")
        return Axis::x;
    if (text == "y")
        return Axis::y;
    if (text == "z")
        return Axis::z;
    throw DomainError("unknown rotation axis '" + text + "'");
}

} // namespace qwalk
