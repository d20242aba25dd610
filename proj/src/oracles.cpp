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
#include "qwalk/oracles.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "qwalk/index_map.hpp"

namespace qwalk::oracles {
namespace {

constexpr double kNormSlack = 1e-10;

void require_normalized(std::span<const Complex> chi) {
    double norm = 0.0;
    for (const Complex& c : chi)
        norm += std::norm(c);
    if (std::abs(norm - 1.0) > kNormSlack) {
        std::ostringstream msg;
        msg << "coin amplitudes must be normalized, |chi|^2 = " << norm;
        throw DomainError(msg.str());
    }
}

void require_size(int dimension, std::span<const Complex> chi) {
    CoinIndexMap check(dimension);
    if (static_cast<int>(chi.size()) != dimension)
        throw InvalidDimension("amplitude list length differs from the coin dimension");
}

double sq(double x) { return x * x; }

} // namespace

double qfi_z_general(int dimension, std::span<const Complex> chi, int t) {
    require_size(dimension, chi);
    require_normalized(chi);
    const double s = 0.5 * (dimension - 1);
    double first = 0.0, second = 0.0;
    for (int k = 0; k < dimension; ++k) {
        const double ms = -s + k;
        const double w = std::norm(chi[k]);
        first += ms * w;
        second += ms * ms * w;
    }
    return 4.0 * t * t * (second - first * first);
}

double qfi_embedded_z(int dimension, std::span<const Complex> chi, int t) {
    if (dimension < 3)
        throw InvalidDimension("embedded rotation needs D >= 3");
    require_size(dimension, chi);
    require_normalized(chi);
    const double low = std::norm(chi.front());
    const double high = std::norm(chi.back());
    return static_cast<double>(t) * t * (low + high - sq(low - high));
}

double qfi_z_closed_small_D(SmallZCase which, std::span<const double> angles, int t) {
    const double tt = static_cast<double>(t) * t;
    auto half_sin = [&](std::size_t i) { return std::sin(0.5 * angles[i]); };
    auto half_cos = [&](std::size_t i) { return std::cos(0.5 * angles[i]); };
    switch (which) {
    case SmallZCase::d2:
        if (angles.size() < 1)
            throw DomainError("D = 2 closed form needs one angle");
        return tt * sq(std::sin(angles[0]));
    case SmallZCase::embedded3: {
        if (angles.size() < 2)
            throw DomainError("embedded D = 3 closed form needs two angles");
        const double s1 = sq(half_sin(0)), c1 = sq(half_cos(0)), c2 = sq(half_cos(1));
        return tt * (2.0 * s1 * c2 * c1 + s1 * c2 + c1 - s1 * s1 * c2 * c2 - c1 * c1);
    }
    case SmallZCase::d4: {
        if (angles.size() < 3)
            throw DomainError("D = 4 closed form needs three angles");
        const double s1 = sq(half_sin(0)), c1 = sq(half_cos(0));
        const double s2 = sq(half_sin(1)), c2 = sq(half_cos(1));
        const double s3 = sq(half_sin(2));
        const double mean = 3.0 * (s1 * c2 - c1) + s1 * s2 * (1.0 - 2.0 * s3);
        return tt * (9.0 * (s1 * c2 + c1) - mean * mean + s1 * s2);
    }
    }
    throw DomainError("unknown closed-form case");
}

double qfi_xy2_special(Axis axis, XyTag tag, double alpha1, double gamma1, int t) {
    if (axis == Axis::z)
        throw DomainError("special-angle forms cover x and y rotations only");
    if (t < 1)
        throw DomainError("t must be >= 1");
    const bool even = t % 2 == 0;
    if ((tag == XyTag::pi_even && !even) || (tag == XyTag::pi_odd && even))
        throw DomainError("parity of t does not match the theta = pi tag");
    // x-rotations swap sin^2(gamma) for cos^2(gamma).
    const double phase_weight = axis == Axis::y ? sq(std::sin(gamma1)) : sq(std::cos(gamma1));
    const double w = phase_weight * sq(std::sin(alpha1));
    const double td = t;
    switch (tag) {
    case XyTag::limit0:
        return td - w;
    case XyTag::pi_even:
        return 0.5 * td * td * (1.0 - 0.5 * w);
    case XyTag::pi_odd:
        return 0.5 * (td * td + 1.0) - 0.25 * sq(td + 1.0) * w;
    }
    throw DomainError("unknown tag");
}

double qfi_xy_scaling(int dimension, XyQuantity quantity, int t) {
    double factor = 0.0;
    switch (dimension) {
    case 2:
        factor = 1.0;
        break;
    case 3:
        factor = 4.0;
        break;
    case 4:
        factor = 7.0;
        break;
    default:
        throw InvalidDimension("x/y scaling is tabulated for D = 2, 3, 4 only");
    }
    if (quantity == XyQuantity::limit0_max)
        return factor * t;
    return 0.5 * factor * (static_cast<double>(t) * t + t % 2);
}

double asymptotic_qfi_rate(Axis axis, int dimension) {
    if (dimension < 2 || dimension > 4)
        throw InvalidDimension("asymptotic rates are tabulated for D = 2, 3, 4 only");
    if (axis == Axis::z)
        return sq(dimension - 1.0);
    static constexpr double kXy[] = {0.5, 2.0, 3.5};
    return kXy[dimension - 2];
}

ParthasarathyMinimum parthasarathy_min(int dimension, int t, double dtheta) {
    const CoinIndexMap index(dimension);
    const double s = index.spin();
    const double spread = 2.0 * s * t * std::abs(dtheta);
    if (!(spread < kPi)) {
        std::ostringstream msg;
        msg << "eigenphase spread " << spread << " must stay below pi";
        throw DomainError(msg.str());
    }
    ParthasarathyMinimum out;
    // Eigenphases lambda_j = m_j t dtheta; cos^2 is smallest for the widest pair.
    for (int j = 0; j < dimension; ++j)
        for (int k = j + 1; k < dimension; ++k) {
            const double diff = (index.spin_projection(k) - index.spin_projection(j)) * t * dtheta;
            const double value = sq(std::cos(0.5 * diff));
            if (value < out.min_overlap_sq) {
                out.min_overlap_sq = value;
                out.lower_shift = index.shift(j);
                out.upper_shift = index.shift(k);
            }
        }
    return out;
}

GroverShapeCheck grover_qfi_shape(int dimension, double theta, int t, double h_sim,
                                  std::optional<double> h_rotation_form) {
    if (dimension != 2 && dimension != 3)
        throw UnsupportedDimension("Grover coins are defined for D = 2, 3 only");
    if (!(std::abs(theta) <= 1.0 - kGroverEdge))
        throw DomainError("Grover shape check needs |theta| <= 1 - edge");
    GroverShapeCheck out;
    const double one_minus = 1.0 - theta * theta;
    out.scaled = h_sim * one_minus;
    out.finite = std::isfinite(out.scaled);
    out.jacobian_sq = 4.0 / one_minus;
    if (dimension == 2) {
        // The rotation form has generator spread 1, so its QFI is at most t^2.
        out.bound = 4.0 * static_cast<double>(t) * t;
        if (h_rotation_form) {
            out.predicted = out.jacobian_sq * *h_rotation_form;
            const double scale = std::max(std::abs(*out.predicted), 1e-300);
            out.relative_deviation = std::abs(h_sim - *out.predicted) / scale;
        }
    }
    return out;
}

std::string to_string(Quantity quantity) {
    switch (quantity) {
    case Quantity::qfi:
        return "qfi";
    case Quantity::fi:
        return "fi";
    case Quantity::entropy:
        return "entropy";
    }
    return "?";
}

std::string to_string(XyTag tag) {
    switch (tag) {
    case XyTag::limit0:
        return "limit0";
    case XyTag::pi_even:
        return "pi_even";
    case XyTag::pi_odd:
        return "pi_odd";
    }
    return "?";
}

namespace {

std::string describe(const ProbeSpec& p) {
    std::ostringstream out;
    out.precision(6);
    out << "alpha=(";
    for (std::size_t i = 0; i < p.angles.size(); ++i)
        out << (i ? "," : "") << p.angles[i];
    out << ") gamma=(";
    for (std::size_t i = 0; i < p.phases.size(); ++i)
        out << (i ? "," : "") << p.phases[i];
    out << ")";
    return out.str();
}

ProbeSpec seeded_probe(int dimension, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, kPi), phase(0.0, kTwoPi);
    std::vector<double> a(dimension - 1), g(dimension - 1);
    for (auto& x : a)
        x = angle(rng);
    for (auto& x : g)
        x = phase(rng);
    return ProbeSpec(dimension, a, g);
}

ProbeSpec uniform_angles(int dimension, double alpha) {
    return ProbeSpec(dimension, std::vector<double>(dimension - 1, alpha), std::vector<double>(dimension - 1, 0.0));
}

OracleCase make_case(std::string id, CoinFamily family, double theta, std::string tag, int t, ProbeSpec probe,
                     Quantity quantity, double expected, double tolerance, bool relative, std::string anchor) {
    OracleCase c;
    c.id = std::move(id);
    c.family = family;
    c.theta = theta;
    c.theta_tag = std::move(tag);
    c.t = t;
    c.probe_description = describe(probe);
    c.probe = std::move(probe);
    c.quantity = quantity;
    c.expected = expected;
    c.tolerance = tolerance;
    c.relative = relative;
    c.anchor = std::move(anchor);
    return c;
}

} // namespace

std::vector<OracleCase> oracle_table() {
    std::vector<OracleCase> table;
    std::mt19937_64 rng(20240917);
    const double exact = 1e-8;
    const double limit = 1e-6;

    for (int d = 2; d <= 6; ++d)
        for (int t : {1, 3, 7}) {
            const ProbeSpec probe = ProbeSpec(d, [&] {
                std::vector<double> a(d - 1, 0.0);
                a[0] = kPi / 2.0;
                return a;
            }(), std::vector<double>(d - 1, 0.0));
            table.push_back(make_case("z-general-D" + std::to_string(d) + "-optimal-t" + std::to_string(t),
                                      CoinFamily::rotation(d, Axis::z), 0.37, "", t, probe, Quantity::qfi,
                                      qfi_z_general(d, make_probe(probe), t), exact, true,
                                      "z-rotation QFI 4t^2 Var(m_s), maximal probe"));
        }
    for (int d : {3, 4, 5})
        for (int k = 0; k < 3; ++k) {
            const ProbeSpec probe = seeded_probe(d, rng);
            table.push_back(make_case("z-general-D" + std::to_string(d) + "-random" + std::to_string(k),
                                      CoinFamily::rotation(d, Axis::z), 1.3, "", 5, probe, Quantity::qfi,
                                      qfi_z_general(d, make_probe(probe), 5), exact, true,
                                      "z-rotation QFI 4t^2 Var(m_s), generic probe"));
        }
    for (int d = 2; d <= 4; ++d)
        table.push_back(make_case("z-basis-D" + std::to_string(d), CoinFamily::rotation(d, Axis::z), 0.8, "", 6,
                                  ProbeSpec::basis_lowest(d), Quantity::qfi, 0.0, 1e-10, false,
                                  "z-rotation QFI vanishes on coin basis states"));

    for (int d : {3, 4}) {
        const ProbeSpec extremes(d, [&] {
            std::vector<double> a(d - 1, 0.0);
            a[0] = kPi / 2.0;
            return a;
        }(), std::vector<double>(d - 1, 0.0));
        table.push_back(make_case("embedded-z-D" + std::to_string(d) + "-optimal", CoinFamily::embedded_z(d), 0.6, "",
                                  3, extremes, Quantity::qfi, qfi_embedded_z(d, make_probe(extremes), 3), exact, true,
                                  "embedded z-rotation QFI, maximum t^2"));
        const ProbeSpec random = seeded_probe(d, rng);
        table.push_back(make_case("embedded-z-D" + std::to_string(d) + "-random", CoinFamily::embedded_z(d), 2.1, "",
                                  4, random, Quantity::qfi, qfi_embedded_z(d, make_probe(random), 4), exact, true,
                                  "embedded z-rotation QFI, generic probe"));
    }

    {
        const ProbeSpec p(2, {kPi / 3.0}, {1.0});
        table.push_back(make_case("z-closed-D2-third", CoinFamily::rotation(2, Axis::z), 0.4, "", 1, p, Quantity::qfi,
                                  qfi_z_closed_small_D(SmallZCase::d2, p.angles, 1), exact, true,
                                  "D=2 z-rotation QFI t^2 sin^2(alpha1)"));
        for (int k = 0; k < 2; ++k) {
            const ProbeSpec p2 = seeded_probe(2, rng);
            table.push_back(make_case("z-closed-D2-random" + std::to_string(k), CoinFamily::rotation(2, Axis::z), 2.2,
                                      "", 5, p2, Quantity::qfi, qfi_z_closed_small_D(SmallZCase::d2, p2.angles, 5),
                                      exact, true, "D=2 z-rotation QFI t^2 sin^2(alpha1)"));
            const ProbeSpec p3 = seeded_probe(3, rng);
            table.push_back(make_case("z-closed-E3-random" + std::to_string(k), CoinFamily::embedded_z(3), 0.9, "", 5,
                                      p3, Quantity::qfi, qfi_z_closed_small_D(SmallZCase::embedded3, p3.angles, 5),
                                      exact, true, "embedded D=3 z-rotation QFI in hypersphere angles"));
            const ProbeSpec p4 = seeded_probe(4, rng);
            table.push_back(make_case("z-closed-D4-random" + std::to_string(k), CoinFamily::rotation(4, Axis::z), 1.7,
                                      "", 5, p4, Quantity::qfi, qfi_z_closed_small_D(SmallZCase::d4, p4.angles, 5),
                                      exact, true, "D=4 z-rotation QFI in hypersphere angles"));
        }
    }

    for (Axis axis : {Axis::x, Axis::y}) {
        const std::string ax = to_string(axis);
        for (int k = 0; k < 3; ++k) {
            const ProbeSpec p = seeded_probe(2, rng);
            const double a = p.angles[0], g = p.phases[0];
            table.push_back(make_case("xy2-" + ax + "-limit0-" + std::to_string(k), CoinFamily::rotation(2, axis),
                                      kLimitTheta, "limit0", 6, p, Quantity::qfi,
                                      qfi_xy2_special(axis, XyTag::limit0, a, g, 6), limit, false,
                                      "D=2 x/y-rotation QFI for theta -> 0, linear in t"));
            table.push_back(make_case("xy2-" + ax + "-pi-even-" + std::to_string(k), CoinFamily::rotation(2, axis), kPi,
                                      "pi", 4, p, Quantity::qfi, qfi_xy2_special(axis, XyTag::pi_even, a, g, 4), exact,
                                      true, "D=2 x/y-rotation QFI at theta = pi, even t"));
            table.push_back(make_case("xy2-" + ax + "-pi-odd-" + std::to_string(k), CoinFamily::rotation(2, axis), kPi,
                                      "pi", 5, p, Quantity::qfi, qfi_xy2_special(axis, XyTag::pi_odd, a, g, 5), exact,
                                      true, "D=2 x/y-rotation QFI at theta = pi, odd t"));
        }
    }

    // x/y QFI at theta = pi and theta -> 0 with the reported optimal probes:
    // |-1> for D = 2, |0> for D = 3, |-1> (second coin row) for D = 4.
    const ProbeSpec best_xy[] = {ProbeSpec(2, {0.0}, {0.0}), uniform_angles(3, kPi), uniform_angles(4, kPi)};
    for (int d = 2; d <= 4; ++d)
        for (Axis axis : {Axis::x, Axis::y}) {
            const std::string base = "xy-scaling-D" + std::to_string(d) + "-" + to_string(axis);
            for (int t : {1, 2, 5, 6})
                table.push_back(make_case(base + "-pi-t" + std::to_string(t), CoinFamily::rotation(d, axis), kPi, "pi",
                                          t, best_xy[d - 2], Quantity::qfi,
                                          qfi_xy_scaling(d, XyQuantity::max_over_theta, t), exact, true,
                                          "x/y-rotation QFI at theta = pi of the reported optimal probe, factor 1/4/7 over D=2"));
            table.push_back(make_case(base + "-limit0-t5", CoinFamily::rotation(d, axis), kLimitTheta, "limit0", 5,
                                      best_xy[d - 2], Quantity::qfi, qfi_xy_scaling(d, XyQuantity::limit0_max, 5),
                                      limit, false, "x/y-rotation QFI as theta -> 0 of the reported optimal probe, linear in t"));
        }

    for (int d = 2; d <= 4; ++d) {
        const ProbeSpec p = seeded_probe(d, rng);
        table.push_back(make_case("fi-z-D" + std::to_string(d), CoinFamily::rotation(d, Axis::z), 0.9, "", 6, p,
                                  Quantity::fi, 0.0, 1e-10, false, "position FI vanishes for z-rotations"));
    }
    for (double alpha : {0.0, kPi / 4.0, 2.0})
        table.push_back(make_case("fi-y-D2-t1-alpha" + std::to_string(alpha).substr(0, 4),
                                  CoinFamily::rotation(2, Axis::y), kPi / 3.0, "", 1, ProbeSpec(2, {alpha}, {0.0}),
                                  Quantity::fi, 1.0, 1e-10, false, "D=2 y-rotation position FI equals 1 at t = 1"));

    for (int d = 2; d <= 4; ++d) {
        const ProbeSpec p(d, [&] {
            std::vector<double> a(d - 1, 0.0);
            a[0] = kPi / 2.0;
            return a;
        }(), std::vector<double>(d - 1, 0.0));
        table.push_back(make_case("entropy-z-optimal-D" + std::to_string(d), CoinFamily::rotation(d, Axis::z), 0.5, "",
                                  5, p, Quantity::entropy, std::log(2.0), 1e-10, false,
                                  "optimal z-probe walker-coin entanglement log 2"));
    }

    for (int d = 2; d <= 4; ++d) {
        const int t = 40;
        const double tt = static_cast<double>(t) * t;
        const ProbeSpec pz(d, [&] {
            std::vector<double> a(d - 1, 0.0);
            a[0] = kPi / 2.0;
            return a;
        }(), std::vector<double>(d - 1, 0.0));
        table.push_back(make_case("rate-z-D" + std::to_string(d) + "-t40", CoinFamily::rotation(d, Axis::z), 1.0, "",
                                  t, pz, Quantity::qfi, asymptotic_qfi_rate(Axis::z, d) * tt, exact, true,
                                  "long-time rate of the maximal QFI, z-rotations"));
        table.push_back(make_case("rate-y-D" + std::to_string(d) + "-t40", CoinFamily::rotation(d, Axis::y), kPi, "pi",
                                  t, best_xy[d - 2], Quantity::qfi, asymptotic_qfi_rate(Axis::y, d) * tt, exact, true,
                                  "long-time rate of the reported optimal probe, y-rotations"));
    }
    return table;
}

std::string to_json_line(const OracleCase& c) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["family"] = c.family.describe();
    j["dimension"] = c.family.dimension;
    j["theta"] = c.theta;
    j["theta_tag"] = c.theta_tag;
    j["t"] = c.t;
    j["probe"] = c.probe_description;
    j["quantity"] = to_string(c.quantity);
    j["expected"] = c.expected;
    j["tolerance"] = c.tolerance;
    j["tolerance_kind"] = c.relative ? "relative" : "absolute";
    j["anchor"] = c.anchor;
    return j.dump();
}

} // namespace qwalk::oracles
