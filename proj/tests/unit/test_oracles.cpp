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

#include <set>

#include <json.hpp>

#include "qwalk/metrology.hpp"
#include "qwalk/oracles.hpp"
#include "support.hpp"

using namespace qwalk;
using namespace qwalk::oracles;
using qwalk::testing::Gen;
using qwalk::testing::relative;

TEST_CASE("general z formula") {
    const double r = std::sqrt(0.5);
    const std::vector<Complex> chi{r, 0.0, r};
    CHECK(qfi_z_general(3, chi, 2) == doctest::Approx(16.0));
    const std::vector<Complex> basis{0.0, 1.0, 0.0, 0.0};
    CHECK(qfi_z_general(4, basis, 7) == 0.0);
    const std::vector<Complex> tilt{std::cos(kPi / 6), std::polar(std::sin(kPi / 6), 0.4)};
    CHECK(qfi_z_general(2, tilt, 1) == doctest::Approx(0.75));
    const std::vector<Complex> bad{1.0, 1.0};
    CHECK_THROWS_AS(qfi_z_general(2, bad, 1), DomainError);
    CHECK_THROWS_AS(qfi_z_general(3, tilt, 1), InvalidDimension);
}

TEST_CASE("embedded z formula") {
    const double r = std::sqrt(0.5);
    CHECK(qfi_embedded_z(3, std::vector<Complex>{r, 0.0, r}, 3) == doctest::Approx(9.0));
    CHECK(qfi_embedded_z(4, std::vector<Complex>{0.0, r, r, 0.0}, 3) == 0.0);
    CHECK_THROWS_AS(qfi_embedded_z(2, std::vector<Complex>{r, r}, 3), InvalidDimension);

    Gen gen(71);
    for (int i = 0; i < 100; ++i) {
        const auto chi = gen.state(3);
        CHECK(relative(qfi_z_general(3, chi, 5), 4.0 * qfi_embedded_z(3, chi, 5)) < 1e-12);
    }
}

TEST_CASE("small-D closed forms") {
    CHECK(qfi_z_closed_small_D(SmallZCase::d2, std::vector<double>{kPi / 2}, 5) == doctest::Approx(25.0));
    CHECK(qfi_z_closed_small_D(SmallZCase::embedded3, std::vector<double>{kPi / 2, 0.0}, 5) == doctest::Approx(25.0));
    for (double a3 : {0.0, 1.0, 2.5})
        CHECK(qfi_z_closed_small_D(SmallZCase::d4, std::vector<double>{kPi / 2, 0.0, a3}, 5) ==
              doctest::Approx(225.0));
}

TEST_CASE("property: closed forms agree with the general formula") {
    Gen gen(72);
    for (int i = 0; i < 200; ++i) {
        const int t = gen.integer(1, 10);
        const ProbeSpec p2 = gen.probe(2), p3 = gen.probe(3), p4 = gen.probe(4);
        CHECK(std::abs(qfi_z_closed_small_D(SmallZCase::d2, p2.angles, t) - qfi_z_general(2, make_probe(p2), t)) <
              1e-10 * t * t);
        CHECK(std::abs(qfi_z_closed_small_D(SmallZCase::embedded3, p3.angles, t) -
                       qfi_embedded_z(3, make_probe(p3), t)) < 1e-10 * t * t);
        CHECK(std::abs(qfi_z_closed_small_D(SmallZCase::d4, p4.angles, t) - qfi_z_general(4, make_probe(p4), t)) <
              1e-10 * t * t);
    }
}

TEST_CASE("x/y special angles") {
    CHECK(qfi_xy2_special(Axis::y, XyTag::limit0, 0.0, 0.3, 6) == 6.0);
    CHECK(qfi_xy2_special(Axis::y, XyTag::pi_even, 0.0, 0.3, 4) == 8.0);
    CHECK(qfi_xy2_special(Axis::y, XyTag::pi_odd, 0.0, 0.3, 3) == 5.0);
    CHECK(qfi_xy2_special(Axis::x, XyTag::limit0, kPi / 2, 0.0, 6) == doctest::Approx(5.0));
    CHECK(qfi_xy2_special(Axis::y, XyTag::limit0, kPi / 2, 0.0, 6) == doctest::Approx(6.0));
    CHECK_THROWS_AS(qfi_xy2_special(Axis::y, XyTag::pi_even, 0.0, 0.0, 3), DomainError);
    CHECK_THROWS_AS(qfi_xy2_special(Axis::y, XyTag::pi_odd, 0.0, 0.0, 2), DomainError);
    CHECK_THROWS_AS(qfi_xy2_special(Axis::z, XyTag::limit0, 0.0, 0.0, 2), DomainError);
}

TEST_CASE("scaling displays and rates") {
    CHECK(qfi_xy_scaling(3, XyQuantity::limit0_max, 5) == 20.0);
    CHECK(qfi_xy_scaling(4, XyQuantity::max_over_theta, 3) == 35.0);
    CHECK(qfi_xy_scaling(3, XyQuantity::max_over_theta, 2) == 8.0);
    CHECK(qfi_xy_scaling(2, XyQuantity::max_over_theta, 5) == 13.0);
    CHECK_THROWS_AS(qfi_xy_scaling(5, XyQuantity::limit0_max, 1), InvalidDimension);
    CHECK(asymptotic_qfi_rate(Axis::z, 4) == 9.0);
    CHECK(asymptotic_qfi_rate(Axis::y, 3) == 2.0);
    CHECK(asymptotic_qfi_rate(Axis::x, 2) == 0.5);
    CHECK(asymptotic_qfi_rate(Axis::x, 4) == 3.5);
}

TEST_CASE("Parthasarathy minimum") {
    const ParthasarathyMinimum d2 = parthasarathy_min(2, 1, 0.2);
    CHECK(d2.min_overlap_sq == doctest::Approx(std::pow(std::cos(0.1), 2)));
    for (int t : {1, 3, 7}) {
        const ParthasarathyMinimum d3 = parthasarathy_min(3, t, 0.05);
        CHECK(d3.lower_shift == -1);
        CHECK(d3.upper_shift == 1);
    }
    CHECK_THROWS_AS(parthasarathy_min(3, 10, 0.2), DomainError);
}

TEST_CASE("random-state cloud never beats the closed-form minimum") {
    // W = exp(-i t dtheta T_z) is diagonal with phases m t dtheta.
    Gen gen(73);
    const int d = 3, t = 2;
    const double dtheta = 0.1;
    const double closed = parthasarathy_min(d, t, dtheta).min_overlap_sq;
    double sampled = 1.0;
    for (int i = 0; i < 100000; ++i) {
        const auto phi = gen.state(d);
        Complex overlap = 0.0;
        for (int k = 0; k < d; ++k)
            overlap += std::norm(phi[k]) * std::exp(Complex(0.0, -(1.0 - k) * t * dtheta));
        sampled = std::min(sampled, std::norm(overlap));
    }
    CHECK(sampled >= closed - 1e-6);
    CHECK(sampled < closed + 1e-2);
}

TEST_CASE("Grover shape check") {
    for (double th : {0.0, 0.5, 0.9, 0.99}) {
        const ProbeSpec p(2, {0.6}, {0.2});
        const double h = qfi_pure(simulate(grover_coin(2, th), p, 4));
        const double hr = qfi_pure(simulate(grover_rotation_form(2.0 * std::acos(th)), p, 4));
        const GroverShapeCheck c = grover_qfi_shape(2, th, 4, h, hr);
        CHECK(c.finite);
        CHECK(c.scaled <= *c.bound + 1e-9);
        CHECK(*c.relative_deviation < 1e-8);
    }
    CHECK(grover_qfi_shape(2, 0.0, 2, 1.0).jacobian_sq == 4.0);
    CHECK(grover_qfi_shape(3, 0.4, 2, 3.0).finite);
    CHECK_FALSE(grover_qfi_shape(3, 0.4, 2, 3.0).bound.has_value());
    CHECK_THROWS_AS(grover_qfi_shape(4, 0.4, 2, 3.0), UnsupportedDimension);
}

TEST_CASE("oracle table shape") {
    const auto table = oracle_table();
    CHECK(table.size() > 80);
    std::set<std::string> ids;
    for (const OracleCase& c : table) {
        CHECK(std::isfinite(c.expected));
        CHECK(c.tolerance > 0.0);
        CHECK(ids.insert(c.id).second);
        const auto j = nlohmann::json::parse(to_json_line(c));
        CHECK(j["id"] == c.id);
        CHECK(j["expected"].get<double>() == c.expected);
        if (c.theta_tag == "limit0") {
            CHECK(c.theta == kLimitTheta);
            CHECK_FALSE(c.relative);
        }
    }
}
