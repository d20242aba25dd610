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
#include "qwalk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include <json.hpp>

#include "qwalk/metrology.hpp"
#include "qwalk/probe_opt.hpp"

namespace qwalk::verify {
namespace {

using oracles::OracleCase;
using oracles::Quantity;

class Tally {
  public:
    Tally(std::string id, std::string group, double tolerance, bool relative) {
        out_.id = std::move(id);
        out_.group = std::move(group);
        out_.tolerance = tolerance;
        out_.relative = relative;
        out_.samples = 0;
    }

    void observe(double expected, double observed) {
        double dev = std::abs(observed - expected);
        if (out_.relative)
            dev /= std::max(std::abs(expected), 1e-300);
        if (!std::isfinite(dev))
            dev = std::numeric_limits<double>::infinity();
        if (out_.samples == 0 || dev > out_.deviation) {
            out_.deviation = dev;
            out_.expected = expected;
            out_.observed = observed;
        }
        ++out_.samples;
    }

    /// Record a one-sided check: observed must not exceed ceiling + tolerance.
    void at_most(double ceiling, double observed) {
        const double excess = std::max(0.0, observed - ceiling);
        if (out_.samples == 0 || excess > out_.deviation) {
            out_.deviation = excess;
            out_.expected = ceiling;
            out_.observed = observed;
        }
        ++out_.samples;
    }

    CheckOutcome done() {
        out_.passed = out_.samples > 0 && out_.deviation <= out_.tolerance;
        return out_;
    }

  private:
    CheckOutcome out_;
};

int scaled(int n, double scale) { return std::max(1, static_cast<int>(std::lround(n * scale))); }

ProbeSpec random_probe(int dimension, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, kPi), phase(0.0, kTwoPi);
    std::vector<double> a(dimension - 1), g(dimension - 1);
    for (auto& x : a)
        x = angle(rng);
    for (auto& x : g)
        x = phase(rng);
    return ProbeSpec(dimension, a, g);
}

struct Sample {
    CoinFamily family;
    double theta = 0.0;
};

Sample random_family(std::mt19937_64& rng, int max_dimension = 6) {
    std::uniform_int_distribution<int> pick(0, 5);
    std::uniform_int_distribution<int> dim(2, max_dimension);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> unit(0.0, 1.0 - 1e-3);
    switch (pick(rng)) {
    case 0:
        return {CoinFamily::rotation(dim(rng), Axis::x), angle(rng)};
    case 1:
        return {CoinFamily::rotation(dim(rng), Axis::y), angle(rng)};
    case 2:
        return {CoinFamily::rotation(dim(rng), Axis::z), angle(rng)};
    case 3:
        return {CoinFamily::embedded_z(std::max(3, dim(rng))), angle(rng)};
    case 4: {
        const int d = dim(rng);
        return {CoinFamily::embedded_u2(d, angle(rng), angle(rng)), angle(rng)};
    }
    default:
        return {CoinFamily::grover(2 + static_cast<int>(rng() % 2)), unit(rng)};
    }
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

void add(std::span<Complex> into, std::span<const Complex> from, double sign = 1.0) {
    for (std::size_t i = 0; i < into.size(); ++i)
        into[i] += sign * from[i];
}

} // namespace

DerivativePair evolve_recurrence(const CoinOperator& coin, const ProbeSpec& probe, int t, Fault fault) {
    DerivativePair pair = initial_pair(probe, t);
    const double sign = fault == Fault::flip_derivative_term ? -1.0 : 1.0;
    for (int k = 0; k < t; ++k) {
        WalkState next = apply_shift_coin(pair.state, coin.matrix);
        WalkState dnext = apply_shift_coin(pair.dstate, coin.matrix);
        const WalkState source = apply_shift_coin(pair.state, coin.derivative);
        add(dnext.amplitudes(), source.amplitudes(), sign);
        pair.state = std::move(next);
        pair.dstate = std::move(dnext);
    }
    return pair;
}

WalkState derivative_by_expansion(const CoinOperator& coin, const ProbeSpec& probe, int t) {
    WalkState total = initial_state(probe, t);
    for (Complex& c : total.amplitudes())
        c = 0.0;
    // Term k: U^(t-1-k) dU U^k psi(0). Each term is built from scratch.
    for (int k = 0; k < t; ++k) {
        WalkState term = initial_state(probe, t);
        for (int j = 0; j < k; ++j)
            term = apply_shift_coin(term, coin.matrix);
        term = apply_shift_coin(term, coin.derivative);
        for (int j = k + 1; j < t; ++j)
            term = apply_shift_coin(term, coin.matrix);
        add(total.amplitudes(), term.amplitudes());
    }
    return total;
}

CheckOutcome evaluate_case(const OracleCase& c, Fault fault) {
    const DerivativePair pair = evolve_recurrence(c.family.at(c.theta), c.probe, c.t, fault);
    double observed = 0.0;
    switch (c.quantity) {
    case Quantity::qfi:
        observed = qfi_pure(pair);
        break;
    case Quantity::fi:
        observed = fi_position(pair).value;
        break;
    case Quantity::entropy:
        observed = entanglement_entropy(pair.state);
        break;
    }
    Tally tally(c.id, "oracle", c.tolerance, c.relative);
    tally.observe(c.expected, observed);
    return tally.done();
}

std::vector<CheckOutcome> coin_properties(const SuiteOptions& options) {
    std::mt19937_64 rng(options.seed);
    std::vector<CheckOutcome> out;
    std::uniform_real_distribution<double> angle(-kTwoPi, kTwoPi);

    Tally unitary("coin-unitarity", "coin", 1e-12, false);
    Tally group("rotation-group-law", "coin", 1e-10, false);
    Tally fd("derivative-finite-difference", "coin", 1e-8, false);
    const int n = scaled(100, options.sample_scale);
    std::vector<CoinFamily> families;
    for (int d = 2; d <= 6; ++d) {
        for (Axis a : {Axis::x, Axis::y, Axis::z})
            families.push_back(CoinFamily::rotation(d, a));
        if (d >= 3)
            families.push_back(CoinFamily::embedded_z(d));
        families.push_back(CoinFamily::embedded_u2(d, 0.7, 1.9));
    }
    families.push_back(CoinFamily::grover(2));
    families.push_back(CoinFamily::grover(3));
    families.push_back(CoinFamily::grover_rotation_form());

    std::uniform_real_distribution<double> unit(0.0, 0.95);
    for (const CoinFamily& f : families) {
        const bool grover = f.kind == CoinKind::grover;
        for (int i = 0; i < n; ++i) {
            const double theta = grover ? unit(rng) : angle(rng);
            const CoinOperator c = f.at(theta);
            const Matrix id = Matrix::Identity(f.dimension, f.dimension);
            unitary.observe(0.0, max_abs(c.matrix.adjoint() * c.matrix - id));
            if (i < n / 4) {
                const double h = 1e-4;
                const Matrix approx = (f.at(theta - 2 * h).matrix - 8.0 * f.at(theta - h).matrix +
                                       8.0 * f.at(theta + h).matrix - f.at(theta + 2 * h).matrix) /
                                      (12.0 * h);
                fd.observe(0.0, max_abs(approx - c.derivative));
            }
            if (f.kind == CoinKind::rotation || f.kind == CoinKind::embedded_rotation_z) {
                const double other = angle(rng);
                group.observe(0.0, max_abs(f.at(theta).matrix * f.at(other).matrix - f.at(theta + other).matrix));
            }
        }
    }
    out.push_back(unitary.done());
    out.push_back(group.done());
    out.push_back(fd.done());

    // D = 3 x and y closed forms written out against the eigendecomposition.
    Tally closed("rotation-D3-closed-form", "coin", 1e-10, false);
    for (int i = 0; i < n; ++i) {
        const double th = angle(rng);
        const double c = std::cos(th), s = std::sin(th), r = std::sqrt(0.5);
        Matrix ry(3, 3);
        ry << 0.5 * (1 + c), -r * s, 0.5 * (1 - c), r * s, c, -r * s, 0.5 * (1 - c), r * s, 0.5 * (1 + c);
        Matrix rx(3, 3);
        const Complex is = kI * s;
        rx << 0.5 * (1 + c), -is * r, -0.5 * (1 - c), -is * r, c, -is * r, -0.5 * (1 - c), -is * r, 0.5 * (1 + c);
        closed.observe(0.0, max_abs(ry - rotation_coin(3, Axis::y, th).matrix));
        closed.observe(0.0, max_abs(rx - rotation_coin(3, Axis::x, th).matrix));
    }
    out.push_back(closed.done());
    return out;
}

std::vector<CheckOutcome> walk_properties(const SuiteOptions& options) {
    std::mt19937_64 rng(options.seed + 1);
    std::vector<CheckOutcome> out;

    Tally norm("norm-preservation", "walk", 1e-12, false);
    Tally cone("light-cone", "walk", 0.0, false);
    const int trials = scaled(10000, options.sample_scale);
    for (int i = 0; i < trials; ++i) {
        const Sample s = random_family(rng);
        const CoinOperator coin = s.family.at(s.theta);
        const int t = 1 + static_cast<int>(rng() % 3);
        WalkState state = initial_state(random_probe(coin.dimension, rng), t + 1);
        for (int k = 0; k < t; ++k) {
            const double before = state.norm_squared();
            state = step(state, coin);
            norm.observe(before, state.norm_squared());
        }
        const int edge = state.max_shift() * t;
        double outside = 0.0;
        for (int x = state.min_position(); x <= state.max_position(); ++x)
            if (std::abs(x) > edge)
                for (const Complex& c : state.site(x))
                    outside = std::max(outside, std::abs(c));
        cone.observe(0.0, outside);
    }
    out.push_back(norm.done());
    out.push_back(cone.done());

    Tally orth("real-coin-orthogonality", "walk", 1e-10, false);
    const int real_trials = scaled(60, options.sample_scale);
    std::uniform_real_distribution<double> angle(0.0, kPi), unit(0.0, 0.95), th(0.0, kTwoPi);
    for (int i = 0; i < real_trials; ++i) {
        const int d = 2 + i % 4;
        CoinFamily f = i % 3 == 0 && d <= 3 ? CoinFamily::grover(d) : CoinFamily::rotation(d, Axis::y);
        const double theta = f.kind == CoinKind::grover ? unit(rng) : th(rng);
        std::vector<double> a(d - 1), g(d - 1);
        for (auto& x : a)
            x = angle(rng);
        for (auto& x : g)
            x = (rng() % 2) ? kPi : 0.0;
        const ProbeSpec p(d, a, g);
        for (int t = 1; t <= 8; ++t) {
            const DerivativePair pair = evolve_recurrence(f.at(theta), p, t, options.fault);
            Complex overlap = 0.0;
            const auto psi = pair.state.amplitudes();
            const auto dpsi = pair.dstate.amplitudes();
            for (std::size_t k = 0; k < psi.size(); ++k)
                overlap += std::conj(psi[k]) * dpsi[k];
            orth.observe(0.0, std::abs(overlap));
        }
    }
    out.push_back(orth.done());

    Tally equiv("recurrence-vs-expansion", "walk", 1e-12, false);
    const int equiv_trials = scaled(40, options.sample_scale);
    for (int i = 0; i < equiv_trials; ++i) {
        const Sample s = random_family(rng, 5);
        const CoinOperator coin = s.family.at(s.theta);
        const ProbeSpec p = random_probe(coin.dimension, rng);
        for (int t = 1; t <= 5; ++t) {
            const DerivativePair pair = evolve_recurrence(coin, p, t, options.fault);
            const WalkState direct = derivative_by_expansion(coin, p, t);
            double diff = 0.0;
            const auto a = pair.dstate.amplitudes();
            const auto b = direct.amplitudes();
            for (std::size_t k = 0; k < a.size(); ++k)
                diff = std::max(diff, std::abs(a[k] - b[k]));
            equiv.observe(0.0, diff);
        }
    }
    out.push_back(equiv.done());

    // The production propagator and the plain-step recurrence must agree.
    Tally engine("propagator-vs-recurrence", "walk", 1e-12, false);
    for (int i = 0; i < equiv_trials; ++i) {
        const Sample s = random_family(rng);
        const CoinOperator coin = s.family.at(s.theta);
        const ProbeSpec p = random_probe(coin.dimension, rng);
        const int t = 1 + static_cast<int>(rng() % 12);
        const DerivativePair ref = evolve_recurrence(coin, p, t, options.fault);
        const DerivativePair fast = simulate(coin, p, t);
        engine.observe(qfi_pure(ref), qfi_pure(fast));
        double diff = 0.0;
        for (std::size_t k = 0; k < ref.dstate.amplitudes().size(); ++k)
            diff = std::max(diff, std::abs(ref.dstate.amplitudes()[k] - fast.dstate.amplitudes()[k]));
        engine.observe(0.0, diff);
    }
    out.push_back(engine.done());
    return out;
}

std::vector<CheckOutcome> metrology_properties(const SuiteOptions& options) {
    std::mt19937_64 rng(options.seed + 2);
    std::vector<CheckOutcome> out;

    Tally bound("fi-below-qfi", "metrology", 1e-9, false);
    const int n = scaled(1000, options.sample_scale);
    for (int i = 0; i < n; ++i) {
        const Sample s = random_family(rng);
        const ProbeSpec p = random_probe(s.family.dimension, rng);
        const int t = 1 + static_cast<int>(rng() % 10);
        const DerivativePair pair = evolve_recurrence(s.family.at(s.theta), p, t, options.fault);
        bound.at_most(qfi_pure(pair), fi_position(pair).value);
    }
    out.push_back(bound.done());

    Tally phases("z-qfi-phase-independence", "metrology", 1e-10, true);
    Tally thetas("z-qfi-theta-independence", "metrology", 1e-10, true);
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    const int m = scaled(30, options.sample_scale);
    for (int i = 0; i < m; ++i) {
        const int d = 2 + i % 4;
        const int t = 1 + i % 7;
        const CoinFamily f = CoinFamily::rotation(d, Axis::z);
        ProbeSpec p = random_probe(d, rng);
        const double theta = phase(rng);
        const double reference = qfi_pure(evolve_recurrence(f.at(theta), p, t, options.fault));
        for (double& g : p.phases)
            g = phase(rng);
        phases.observe(reference, qfi_pure(evolve_recurrence(f.at(theta), p, t, options.fault)));
        for (int k = 0; k < 9; ++k)
            thetas.observe(reference,
                           qfi_pure(evolve_recurrence(f.at(k * kPi / 4.0), p, t, options.fault)));
    }
    out.push_back(phases.done());
    out.push_back(thetas.done());

    Tally period("xy2-theta-2pi-periodicity", "metrology", 1e-10, true);
    for (int i = 0; i < m; ++i) {
        const CoinFamily f = CoinFamily::rotation(2, i % 2 ? Axis::x : Axis::y);
        const ProbeSpec p = random_probe(2, rng);
        const double theta = phase(rng);
        const int t = 1 + i % 8;
        period.observe(qfi_pure(evolve_recurrence(f.at(theta), p, t, options.fault)),
                       qfi_pure(evolve_recurrence(f.at(theta + kTwoPi), p, t, options.fault)));
    }
    out.push_back(period.done());

    Tally grover("grover-scaled-qfi-bounded", "metrology", 1e-9, true);
    for (int t = 1; t <= 6; ++t)
        for (double gap : {1e-1, 1e-3, 1e-5, 1e-7, kGroverEdge}) {
            const double theta = 1.0 - gap;
            const ProbeSpec p = random_probe(2, rng);
            const double h = qfi_pure(evolve_recurrence(grover_coin(2, theta), p, t, options.fault));
            const oracles::GroverShapeCheck check = oracles::grover_qfi_shape(2, theta, t, h);
            grover.at_most(*check.bound, check.finite ? check.scaled : 1e300);
        }
    out.push_back(grover.done());

    Tally fidelity("fidelity-qfi-agreement", "metrology", 1e-4, true);
    const int f_trials = scaled(20, options.sample_scale);
    for (int i = 0; i < f_trials; ++i) {
        Sample s = random_family(rng, 4);
        if (s.family.kind == CoinKind::grover)
            s.theta = std::min(s.theta, 0.9);
        const ProbeSpec p = random_probe(s.family.dimension, rng);
        const int t = 1 + static_cast<int>(rng() % 8);
        const double h = qfi_pure(evolve_recurrence(s.family.at(s.theta), p, t, options.fault));
        if (h < 1e-3)
            continue;
        fidelity.observe(h, qfi_fidelity(s.family, s.theta, p, t).value);
    }
    out.push_back(fidelity.done());
    return out;
}

std::vector<CheckOutcome> oracle_properties(const SuiteOptions& options) {
    std::mt19937_64 rng(options.seed + 3);
    std::vector<CheckOutcome> out;
    Tally extremes("z-general-extreme-support", "oracle", 1e-12, true);
    std::uniform_real_distribution<double> unit(0.0, 1.0), phase(0.0, kTwoPi);
    for (int i = 0; i < scaled(200, options.sample_scale); ++i) {
        const int d = 2 + i % 5;
        const double s = 0.5 * (d - 1);
        const int t = 1 + i % 9;
        const double w = unit(rng);
        std::vector<Complex> chi(d, 0.0);
        chi.front() = std::polar(std::sqrt(w), phase(rng));
        chi.back() = std::polar(std::sqrt(1.0 - w), phase(rng));
        const double diff = std::norm(chi.back()) - std::norm(chi.front());
        extremes.observe(4.0 * t * t * s * s * (1.0 - diff * diff), oracles::qfi_z_general(d, chi, t));
    }
    out.push_back(extremes.done());
    return out;
}

int Summary::failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckOutcome& c) { return !c.passed; }));
}

Summary run_verify(const SuiteOptions& options) {
    Summary summary;
    for (const OracleCase& c : oracles::oracle_table())
        summary.checks.push_back(evaluate_case(c, options.fault));
    for (auto suite : {coin_properties, walk_properties, metrology_properties, oracle_properties})
        for (CheckOutcome& c : suite(options))
            summary.checks.push_back(std::move(c));
    return summary;
}

namespace {

nlohmann::ordered_json as_json(const CheckOutcome& c) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["group"] = c.group;
    j["passed"] = c.passed;
    j["expected"] = c.expected;
    j["observed"] = c.observed;
    j["max_deviation"] = std::isfinite(c.deviation) ? nlohmann::ordered_json(c.deviation) : nlohmann::ordered_json("inf");
    j["tolerance"] = c.tolerance;
    j["tolerance_kind"] = c.relative ? "relative" : "absolute";
    j["samples"] = c.samples;
    return j;
}

} // namespace

std::string to_json(const CheckOutcome& outcome) { return as_json(outcome).dump(); }

std::string summary_json(const Summary& summary) {
    nlohmann::ordered_json j;
    j["passed"] = summary.passed();
    j["checks"] = summary.checks.size();
    j["failures"] = summary.failures();
    auto& list = j["results"] = nlohmann::ordered_json::array();
    for (const CheckOutcome& c : summary.checks)
        list.push_back(as_json(c));
    return j.dump(2);
}

} // namespace qwalk::verify
