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
#include "qwalk/coin.hpp"

#include <cmath>
#include <sstream>

namespace qwalk {
namespace {

void require_dimension(int dimension, int minimum) {
    if (dimension < minimum)
        throw InvalidDimension("coin dimension must be >= " + std::to_string(minimum) + ", got " +
                               std::to_string(dimension));
}

// Angular-momentum ladder construction with T_z = diag(s, s-1, ..., -s).
Matrix ladder_generator(int dimension, Axis axis) {
    const double s = 0.5 * (dimension - 1);
    Matrix t = Matrix::Zero(dimension, dimension);
    if (axis == Axis::z) {
        for (int r = 0; r < dimension; ++r)
            t(r, r) = s - r;
        return t;
    }
    for (int r = 0; r + 1 < dimension; ++r) {
        // <m+1| T_+ |m> with m the projection of row r + 1.
        const double m = s - (r + 1);
        const double raise = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
        if (axis == Axis::x) {
            t(r, r + 1) = 0.5 * raise;
            t(r + 1, r) = 0.5 * raise;
        } else {
            t(r, r + 1) = Complex(0.0, -0.5 * raise);
            t(r + 1, r) = Complex(0.0, 0.5 * raise);
        }
    }
    return t;
}

Matrix tabulated_generator(int dimension, Axis axis) {
    Matrix t = Matrix::Zero(dimension, dimension);
    const Complex i = kI;
    if (dimension == 2) {
        switch (axis) {
        case Axis::x:
            t << 0.0, 0.5, 0.5, 0.0;
            break;
        case Axis::y:
            t << 0.0, -0.5 * i, 0.5 * i, 0.0;
            break;
        case Axis::z:
            t << 0.5, 0.0, 0.0, -0.5;
            break;
        }
    } else if (dimension == 3) {
        const double r = 1.0 / std::sqrt(2.0);
        switch (axis) {
        case Axis::x:
            t << 0.0, r, 0.0, r, 0.0, r, 0.0, r, 0.0;
            break;
        case Axis::y:
            t << 0.0, -i * r, 0.0, i * r, 0.0, -i * r, 0.0, i * r, 0.0;
            break;
        case Axis::z:
            t << 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0;
            break;
        }
    } else {
        const double h = std::sqrt(3.0) / 2.0;
        switch (axis) {
        case Axis::x:
            t << 0.0, h, 0.0, 0.0, //
                h, 0.0, 1.0, 0.0,  //
                0.0, 1.0, 0.0, h,  //
                0.0, 0.0, h, 0.0;
            break;
        case Axis::y:
            t << 0.0, -i * h, 0.0, 0.0, //
                i * h, 0.0, -i, 0.0,    //
                0.0, i, 0.0, -i * h,    //
                0.0, 0.0, i * h, 0.0;
            break;
        case Axis::z:
            t << 1.5, 0.0, 0.0, 0.0, //
                0.0, 0.5, 0.0, 0.0,  //
                0.0, 0.0, -0.5, 0.0, //
                0.0, 0.0, 0.0, -1.5;
            break;
        }
    }
    return t;
}

} // namespace

std::string to_string(CoinKind kind) {
    switch (kind) {
    case CoinKind::rotation:
        return "rotation";
    case CoinKind::embedded_rotation_z:
        return "embedded-rotation-z";
    case CoinKind::embedded_u2:
        return "embedded-u2";
    case CoinKind::grover:
        return "grover";
    case CoinKind::grover_rotation_form:
        return "grover-rotation-form";
    }
    return "?";
}

CoinKind parse_coin_kind(const std::string& text) {
    for (CoinKind kind : {CoinKind::rotation, CoinKind::embedded_rotation_z, CoinKind::embedded_u2,
                          CoinKind::grover, CoinKind::grover_rotation_form})
        if (to_string(kind) == text)
            return kind;
    throw DomainError("unknown coin family '" + text + "'");
}

GeneratorSet spin_generators(int dimension, Axis axis) {
    require_dimension(dimension, 2);
    GeneratorSet set{dimension, axis, {}};
    set.matrix = dimension <= 4 ? tabulated_generator(dimension, axis) : ladder_generator(dimension, axis);
    return set;
}

CoinOperator rotation_coin(int dimension, Axis axis, double theta) {
    const GeneratorSet generator = spin_generators(dimension, axis);
    CoinOperator coin{dimension, CoinKind::rotation, axis, 0.0, 0.0, theta, {}, {}};
    if (axis == Axis::z) {
        coin.matrix = Matrix::Zero(dimension, dimension);
        for (int r = 0; r < dimension; ++r)
            coin.matrix(r, r) = std::exp(-kI * theta * generator.matrix(r, r).real());
    } else {
        Eigen::SelfAdjointEigenSolver<Matrix> eig(generator.matrix);
        const Eigen::VectorXd& lambda = eig.eigenvalues();
        Eigen::VectorXcd phases(dimension);
        for (int k = 0; k < dimension; ++k)
            phases(k) = std::exp(-kI * theta * lambda(k));
        coin.matrix = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
    }
    coin.derivative = -kI * generator.matrix * coin.matrix;
    return coin;
}

CoinOperator embedded_rotation_z(int dimension, double theta) {
    require_dimension(dimension, 3);
    CoinOperator coin{dimension, CoinKind::embedded_rotation_z, Axis::z, 0.0, 0.0, theta, {}, {}};
    coin.matrix = Matrix::Identity(dimension, dimension);
    coin.derivative = Matrix::Zero(dimension, dimension);
    const int last = dimension - 1;
    coin.matrix(0, 0) = std::exp(-0.5 * kI * theta);
    coin.matrix(last, last) = std::exp(0.5 * kI * theta);
    coin.derivative(0, 0) = -0.5 * kI * coin.matrix(0, 0);
    coin.derivative(last, last) = 0.5 * kI * coin.matrix(last, last);
    return coin;
}

CoinOperator embedded_u2_coin(int dimension, double xi, double theta, double zeta) {
    require_dimension(dimension, 2);
    CoinOperator coin{dimension, CoinKind::embedded_u2, Axis::y, xi, zeta, theta, {}, {}};
    coin.matrix = Matrix::Identity(dimension, dimension);
    coin.derivative = Matrix::Zero(dimension, dimension);
    const int last = dimension - 1;
    const Complex diag_lo = std::exp(-0.5 * kI * (xi + zeta));
    const Complex diag_hi = std::exp(0.5 * kI * (xi + zeta));
    const Complex off_up = std::exp(0.5 * kI * (xi - zeta));
    const Complex off_dn = std::exp(-0.5 * kI * (xi - zeta));
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    coin.matrix(0, 0) = diag_lo * c;
    coin.matrix(0, last) = -off_up * s;
    coin.matrix(last, 0) = off_dn * s;
    coin.matrix(last, last) = diag_hi * c;
    coin.derivative(0, 0) = -0.5 * diag_lo * s;
    coin.derivative(0, last) = -0.5 * off_up * c;
    coin.derivative(last, 0) = 0.5 * off_dn * c;
    coin.derivative(last, last) = -0.5 * diag_hi * s;
    return coin;
}

CoinOperator grover_coin(int dimension, double theta) {
    if (dimension != 2 && dimension != 3)
        throw UnsupportedDimension("generalized Grover coin is defined for D = 2, 3 only, got " +
                                   std::to_string(dimension));
    if (!(theta >= 0.0 && theta <= 1.0 - kGroverEdge)) {
        std::ostringstream msg;
        msg << "Grover parameter must lie in [0, 1 - " << kGroverEdge << "], got " << theta;
        throw DomainError(msg.str());
    }
    CoinOperator coin{dimension, CoinKind::grover, Axis::z, 0.0, 0.0, theta, {}, {}};
    coin.matrix = Matrix::Zero(dimension, dimension);
    coin.derivative = Matrix::Zero(dimension, dimension);
    const double th2 = theta * theta;
    if (dimension == 2) {
        const double r = std::sqrt(1.0 - th2);
        coin.matrix << theta, r, r, -theta;
        const double dr = -theta / r;
        coin.derivative << 1.0, dr, dr, -1.0;
    } else {
        const double q = std::sqrt(2.0 - 2.0 * th2);
        const double off = theta * q;
        const double corner = 1.0 - th2;
        coin.matrix << -th2, off, corner, //
            off, 2.0 * th2 - 1.0, off,    //
            corner, off, -th2;
        const double doff = (2.0 - 4.0 * th2) / q;
        coin.derivative << -2.0 * theta, doff, -2.0 * theta, //
            doff, 4.0 * theta, doff,                         //
            -2.0 * theta, doff, -2.0 * theta;
    }
    return coin;
}

CoinOperator grover_rotation_form(double theta) {
    const CoinOperator ry = rotation_coin(2, Axis::y, theta);
    const CoinOperator rz = rotation_coin(2, Axis::z, kPi);
    CoinOperator coin{2, CoinKind::grover_rotation_form, Axis::y, 0.0, 0.0, theta, {}, {}};
    coin.matrix = kI * ry.matrix * rz.matrix;
    coin.derivative = kI * ry.derivative * rz.matrix;
    return coin;
}

CoinOperator CoinFamily::at(double theta) const {
    switch (kind) {
    case CoinKind::rotation:
        return rotation_coin(dimension, axis, theta);
    case CoinKind::embedded_rotation_z:
        return embedded_rotation_z(dimension, theta);
    case CoinKind::embedded_u2:
        return embedded_u2_coin(dimension, xi, theta, zeta);
    case CoinKind::grover:
        return grover_coin(dimension, theta);
    case CoinKind::grover_rotation_form:
        if (dimension != 2)
            throw UnsupportedDimension("grover-rotation-form is defined for D = 2 only");
        return qwalk::grover_rotation_form(theta);
    }
    throw DomainError("unknown coin kind");
}

bool CoinFamily::admits(double theta) const {
    if (!std::isfinite(theta))
        return false;
    if (kind == CoinKind::grover)
        return theta >= 0.0 && theta <= 1.0 - kGroverEdge;
    return true;
}

std::string CoinFamily::describe() const {
    std::ostringstream out;
    out << to_string(kind) << "(D=" << dimension;
    if (kind == CoinKind::rotation)
        out << ", axis=" << to_string(axis);
    if (kind == CoinKind::embedded_u2)
        out << ", xi=" << xi << ", zeta=" << zeta;
    out << ")";
    return out.str();
}

} // namespace qwalk
