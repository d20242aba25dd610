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
#include <doctest.h>

#include "qwalk/coin.hpp"
#include "qwalk/index_map.hpp"
#include "support.hpp"

using namespace qwalk;
using qwalk::testing::Gen;
using qwalk::testing::max_abs;

TEST_CASE("index map follows the even/odd shift sets") {
    CHECK(CoinIndexMap(2).shifts() == std::vector<int>{-1, 1});
    CHECK(CoinIndexMap(3).shifts() == std::vector<int>{-1, 0, 1});
    CHECK(CoinIndexMap(4).shifts() == std::vector<int>{-2, -1, 1, 2});
    CHECK(CoinIndexMap(5).shifts() == std::vector<int>{-2, -1, 0, 1, 2});
    CHECK(CoinIndexMap(4).max_shift() == 2);
    CHECK(CoinIndexMap(4).spin_projection(0) == doctest::Approx(-1.5));
    CHECK(CoinIndexMap(4).row_of_shift(1) == 2);
    CHECK_THROWS_AS(CoinIndexMap(1), InvalidDimension);
    CHECK(CoinIndexMap(4).row_of_shift(0) == -1);
}

TEST_CASE("tabulated generators") {
    const Matrix x2 = spin_generators(2, Axis::x).matrix;
    Matrix expect(2, 2);
    expect << 0.0, 0.5, 0.5, 0.0;
    CHECK(max_abs(x2 - expect) == 0.0);

    const Matrix z3 = spin_generators(3, Axis::z).matrix;
    CHECK(max_abs(z3 - Eigen::Vector3cd(1.0, 0.0, -1.0).asDiagonal().toDenseMatrix()) == 0.0);

    const Matrix z5 = spin_generators(5, Axis::z).matrix;
    for (int k = 0; k < 5; ++k)
        CHECK(z5(k, k).real() == doctest::Approx(2.0 - k));
    CHECK_THROWS_AS(spin_generators(1, Axis::z), InvalidDimension);
}

TEST_CASE("generators are Hermitian and close the su(2) algebra") {
    for (int d = 2; d <= 8; ++d) {
        const Matrix x = spin_generators(d, Axis::x).matrix;
        const Matrix y = spin_generators(d, Axis::y).matrix;
        const Matrix z = spin_generators(d, Axis::z).matrix;
        CAPTURE(d);
        for (const Matrix* m : {&x, &y, &z})
            CHECK(max_abs(*m - m->adjoint()) < 1e-12);
        CHECK(max_abs(x * y - y * x - kI * z) < 1e-12);
        CHECK(max_abs(y * z - z * y - kI * x) < 1e-12);
        CHECK(max_abs(z * x - x * z - kI * y) < 1e-12);
    }
}

TEST_CASE("ladder construction reproduces the tables for small D") {
    // Above D = 4 the ladder path is the only one; below, compare Casimirs.
    for (int d = 2; d <= 7; ++d) {
        const double s = 0.5 * (d - 1);
        Matrix casimir = Matrix::Zero(d, d);
        for (Axis a : {Axis::x, Axis::y, Axis::z}) {
            const Matrix g = spin_generators(d, a).matrix;
            casimir += g * g;
        }
        CHECK(max_abs(casimir - s * (s + 1) * Matrix::Identity(d, d)) < 1e-12);
    }
}

TEST_CASE("rotation coin examples") {
    const double th = 0.83;
    const Matrix z2 = rotation_coin(2, Axis::z, th).matrix;
    CHECK(std::abs(z2(0, 0) - std::exp(-kI * th / 2.0)) < 1e-15);
    CHECK(std::abs(z2(1, 1) - std::exp(kI * th / 2.0)) < 1e-15);

    const Matrix z3 = rotation_coin(3, Axis::z, th).matrix;
    CHECK(std::abs(z3(0, 0) - std::exp(-kI * th)) < 1e-15);
    CHECK(std::abs(z3(1, 1) - 1.0) < 1e-15);
    CHECK(std::abs(z3(2, 2) - std::exp(kI * th)) < 1e-15);

    for (int d = 2; d <= 6; ++d)
        for (Axis a : {Axis::x, Axis::y, Axis::z})
            CHECK(max_abs(rotation_coin(d, a, 0.0).matrix - Matrix::Identity(d, d)) < 1e-14);
}

TEST_CASE("rotation coin agrees with a series exponential") {
    const Matrix ty = spin_generators(3, Axis::y).matrix;
    const Matrix series = qwalk::testing::expm_series(Complex(0.0, -0.7) * ty);
    CHECK(max_abs(rotation_coin(3, Axis::y, 0.7).matrix - series) < 1e-12);

    Gen gen(11);
    for (int i = 0; i < 40; ++i) {
        const int d = gen.integer(2, 7);
        const Axis a = gen.axis();
        const double th = gen.uniform(-7.0, 7.0);
        const Matrix t = spin_generators(d, a).matrix;
        CAPTURE(d);
        CAPTURE(th);
        CHECK(max_abs(rotation_coin(d, a, th).matrix - qwalk::testing::expm_series(Complex(0.0, -th) * t)) < 1e-11);
    }
}

TEST_CASE("embedded z rotation") {
    const double th = 1.4;
    for (int d : {3, 4}) {
        const Matrix m = embedded_rotation_z(d, th).matrix;
        CHECK(std::abs(m(0, 0) - std::exp(-kI * th / 2.0)) < 1e-15);
        CHECK(std::abs(m(d - 1, d - 1) - std::exp(kI * th / 2.0)) < 1e-15);
        for (int k = 1; k < d - 1; ++k)
            CHECK(std::abs(m(k, k) - 1.0) < 1e-15);
        CHECK(max_abs(m - Matrix(m.diagonal().asDiagonal())) == 0.0);
    }
    CHECK(max_abs(embedded_rotation_z(3, 0.0).matrix - Matrix::Identity(3, 3)) == 0.0);
    CHECK_THROWS_AS(embedded_rotation_z(2, 0.3), InvalidDimension);
}

TEST_CASE("embedded U(2) coin") {
    const double th = 0.9;
    Matrix expect(2, 2);
    expect << std::cos(th / 2), -std::sin(th / 2), std::sin(th / 2), std::cos(th / 2);
    CHECK(max_abs(embedded_u2_coin(2, 0.0, th, 0.0).matrix - expect) < 1e-15);
    CHECK(max_abs(embedded_u2_coin(3, 0.0, 0.0, 0.0).matrix - Matrix::Identity(3, 3)) < 1e-15);
    const Matrix m = embedded_u2_coin(4, kPi, kPi / 3.0, kPi / 2.0).matrix;
    CHECK(max_abs(m.adjoint() * m - Matrix::Identity(4, 4)) < 1e-12);
    // Interior rows are untouched.
    CHECK(std::abs(m(1, 1) - 1.0) < 1e-15);
    CHECK(std::abs(m(2, 2) - 1.0) < 1e-15);
}

TEST_CASE("Grover coin special points") {
    const Matrix h = grover_coin(2, 1.0 / std::sqrt(2.0)).matrix;
    Matrix hadamard(2, 2);
    hadamard << 1.0, 1.0, 1.0, -1.0;
    hadamard /= std::sqrt(2.0);
    CHECK(max_abs(h - hadamard) < 1e-15);

    // 2/3 J - I: every diagonal entry is -1/3.
    const Matrix g = grover_coin(3, 1.0 / std::sqrt(3.0)).matrix;
    for (int k = 0; k < 3; ++k)
        CHECK(g(k, k).real() == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (r != c)
                CHECK(std::abs(g(r, c)) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

    Matrix edge(2, 2);
    edge << 1.0, 0.0, 0.0, -1.0;
    CHECK(max_abs(grover_coin(2, 1.0 - kGroverEdge).matrix - edge) < 1e-4);
    CHECK_THROWS_AS(grover_coin(2, 1.0), DomainError);
    CHECK_THROWS_AS(grover_coin(2, -0.1), DomainError);
    CHECK_THROWS_AS(grover_coin(4, 0.5), UnsupportedDimension);
}

TEST_CASE("Grover coin equals a y rotation composed with a fixed z rotation") {
    for (double th : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double tilde = 2.0 * std::acos(th);
        CHECK(max_abs(grover_coin(2, th).matrix - grover_rotation_form(tilde).matrix) < 1e-14);
    }
}

TEST_CASE("property: unitarity and anti-Hermitian C^dagger dC over random coins") {
    Gen gen(3);
    for (int i = 0; i < 300; ++i) {
        const int d = gen.integer(2, 6);
        CoinOperator c;
        switch (i % 5) {
        case 0:
            c = rotation_coin(d, gen.axis(), gen.uniform(-10.0, 10.0));
            break;
        case 1:
            c = embedded_rotation_z(std::max(d, 3), gen.uniform(-10.0, 10.0));
            break;
        case 2:
            c = embedded_u2_coin(d, gen.uniform(0.0, 4.0 * kPi), gen.uniform(0.0, kPi), gen.uniform(0.0, kTwoPi));
            break;
        case 3:
            c = grover_coin(gen.integer(2, 3), gen.uniform(0.0, 0.999));
            break;
        default:
            c = grover_rotation_form(gen.uniform(0.0, kTwoPi));
        }
        const int n = c.dimension;
        CHECK(max_abs(c.matrix.adjoint() * c.matrix - Matrix::Identity(n, n)) < 1e-12);
        const Matrix k = c.matrix.adjoint() * c.derivative;
        CHECK(max_abs(k.adjoint() + k) < 1e-12);
    }
}

TEST_CASE("property: derivative matches central differences") {
    Gen gen(5);
    const double h = 1e-5;
    for (int i = 0; i < 120; ++i) {
        const int d = gen.integer(2, 5);
        CoinFamily f;
        switch (i % 4) {
        case 0:
            f = CoinFamily::rotation(d, gen.axis());
            break;
        case 1:
            f = CoinFamily::embedded_z(std::max(3, d));
            break;
        case 2:
            f = CoinFamily::embedded_u2(d, gen.uniform(0.0, 4.0 * kPi), gen.uniform(0.0, kTwoPi));
            break;
        default:
            f = CoinFamily::grover(gen.integer(2, 3));
        }
        const double th = f.kind == CoinKind::grover ? gen.uniform(0.01, 0.95) : gen.uniform(-6.0, 6.0);
        const Matrix fd = (f.at(th + h).matrix - f.at(th - h).matrix) / (2.0 * h);
        CAPTURE(f.describe());
        CHECK(max_abs(fd - f.at(th).derivative) < 1e-8);
    }
}

TEST_CASE("coin family plumbing") {
    CHECK(parse_coin_kind("embedded-u2") == CoinKind::embedded_u2);
    CHECK(to_string(CoinKind::grover_rotation_form) == "grover-rotation-form");
    CHECK_THROWS_AS(parse_coin_kind("hadamard"), Error);
    CHECK(CoinFamily::grover(2).admits(0.5));
    CHECK_FALSE(CoinFamily::grover(2).admits(1.0));
    CHECK(CoinFamily::rotation(3, Axis::y).admits(100.0));
    const CoinFamily bad{CoinKind::grover_rotation_form, 3, Axis::y};
    CHECK_THROWS_AS(bad.at(0.1), UnsupportedDimension);
}
