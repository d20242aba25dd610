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

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/probe.hpp"

namespace qwalk::testing {

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

/// Hand-rolled generators for property tests; every test seeds its own engine.
class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    ProbeSpec probe(int dimension) {
        std::vector<double> a(dimension - 1), g(dimension - 1);
        for (auto& x : a)
            x = uniform(0.0, kPi);
        for (auto& x : g)
            x = uniform(0.0, kTwoPi);
        return ProbeSpec(dimension, a, g);
    }

    ProbeSpec real_probe(int dimension) {
        ProbeSpec p = probe(dimension);
        for (auto& g : p.phases)
            g = integer(0, 1) ? kPi : 0.0;
        return p;
    }

    std::vector<Complex> state(int dimension) {
        std::normal_distribution<double> n;
        std::vector<Complex> v(dimension);
        double norm = 0.0;
        for (auto& c : v) {
            c = Complex(n(rng_), n(rng_));
            norm += std::norm(c);
        }
        for (auto& c : v)
            c /= std::sqrt(norm);
        return v;
    }

    Axis axis() { return static_cast<Axis>(integer(0, 2)); }

    std::mt19937_64& engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

/// Scaling-and-squaring Taylor exponential, independent of any eigensolver.
inline Matrix expm_series(const Matrix& a) {
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 0.25) {
        scale *= 0.5;
        ++squarings;
    }
    const Matrix b = a * scale;
    Matrix term = Matrix::Identity(a.rows(), a.cols());
    Matrix sum = term;
    for (int k = 1; k < 30; ++k) {
        term = term * b / static_cast<double>(k);
        sum += term;
    }
    for (int i = 0; i < squarings; ++i)
        sum = sum * sum;
    return sum;
}

inline double relative(double observed, double expected) {
    return std::abs(observed - expected) / std::max(std::abs(expected), 1e-300);
}

} // namespace qwalk::testing
