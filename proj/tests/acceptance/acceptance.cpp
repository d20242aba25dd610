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
// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: qwalk_acceptance [criterion-number ...]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qwalk/metrology.hpp"
#include "qwalk/oracles.hpp"
#include "qwalk/probe_opt.hpp"
#include "qwalk/verify.hpp"

using namespace qwalk;

namespace {

struct Verdict {
    bool passed = true;
    std::ostringstream detail;

    /// Record a failing sub-check; the first few are kept for the report.
    void fail(const std::string& what) {
        if (passed || failures < 4)
            detail << (detail.tellp() > 0 ? "; " : "") << what;
        passed = false;
        ++failures;
    }
    int failures = 0;
};

double rel(double observed, double expected) { return std::abs(observed - expected) / std::max(std::abs(expected), 1e-300); }

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

ProbeSpec random_probe(int d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, kPi), phase(0.0, kTwoPi);
    std::vector<double> a(d - 1), g(d - 1);
    for (auto& x : a)
        x = angle(rng);
    for (auto& x : g)
        x = phase(rng);
    return ProbeSpec(d, a, g);
}

std::vector<double> theta_grid(int points) {
    std::vector<double> g;
    for (int k = 0; k <= points; ++k)
        g.push_back(kTwoPi * k / points);
    return g;
}

// 1. z-rotation maximum and balanced extremes of the argmax.
Verdict criterion_1() {
    Verdict v;
    double worst = 0.0, worst_balance = 0.0;
    for (int d = 2; d <= 6; ++d)
        for (int t = 1; t <= 10; ++t) {
            const OptimizationResult r = optimize({CoinFamily::rotation(d, Axis::z), 0.7, t}, default_optimize_options(d));
            const double expected = (d - 1.0) * (d - 1.0) * t * t;
            const auto chi = make_probe(r.best_probe);
            const double balance = std::abs(std::abs(chi.front()) - std::abs(chi.back()));
            worst = std::max(worst, rel(r.best_value, expected));
            worst_balance = std::max(worst_balance, balance);
            if (rel(r.best_value, expected) > 1e-6)
                v.fail(fmt("D=%g t=%g H=%.10g expected %.10g", d, t, r.best_value, expected));
            if (balance > 1e-4)
                v.fail(fmt("D=%g t=%g ||chi_M|-|chi_-M||=%.3g", d, t, balance));
        }
    v.detail << (v.detail.tellp() > 0 ? "; " : "") << fmt("max rel dev %.2e, max imbalance %.2e", worst, worst_balance);
    return v;
}

// 2. z-rotation position FI vanishes.
Verdict criterion_2() {
    Verdict v;
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const int d = 2 + i % 3;
        const int t = 1 + static_cast<int>(rng() % 8);
        const double f = fi_position(simulate(rotation_coin(d, Axis::z, angle(rng)), random_probe(d, rng), t)).value;
        worst = std::max(worst, std::abs(f));
        if (!(std::abs(f) < 1e-10))
            v.fail(fmt("sample %g F=%.3g", i, f));
    }
    v.detail << (v.detail.tellp() > 0 ? "; " : "") << fmt("200 probes, max |F| %.2e", worst);
    return v;
}

// 3. Embedding gives no gain beyond t^2, and the factor 4 in D = 3.
Verdict criterion_3() {
    Verdict v;
    double worst = 0.0;
    for (int d : {3, 4})
        for (int t = 1; t <= 8; ++t) {
            const OptimizationResult r = optimize({CoinFamily::embedded_z(d), 0.9, t}, default_optimize_options(d));
            worst = std::max(worst, rel(r.best_value, t * t));
            if (rel(r.best_value, t * t) > 1e-8)
                v.fail(fmt("D=%g t=%g max H=%.12g", d, t, r.best_value));
        }
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    double worst_factor = 0.0;
    for (int i = 0; i < 100; ++i) {
        const ProbeSpec p = random_probe(3, rng);
        const double th = angle(rng);
        const int t = 1 + i % 10;
        const double actual = qfi_pure(simulate(rotation_coin(3, Axis::z, th), p, t));
        const double embedded = qfi_pure(simulate(embedded_rotation_z(3, th), p, t));
        worst_factor = std::max(worst_factor, rel(actual, 4.0 * embedded));
        if (rel(actual, 4.0 * embedded) > 1e-9)
            v.fail(fmt("probe %g: H3=%.12g 4HE3=%.12g", i, actual, 4.0 * embedded));
    }
    v.detail << (v.detail.tellp() > 0 ? "; " : "")
             << fmt("max rel dev of max H %.2e, of factor 4 %.2e", worst, worst_factor);
    return v;
}

// 4. x/y special angles in D = 2.
Verdict criterion_4() {
    Verdict v;
    std::mt19937_64 rng(4);
    double worst_limit = 0.0, worst_pi = 0.0;
    for (Axis axis : {Axis::x, Axis::y})
        for (int i = 0; i < 50; ++i) {
            const ProbeSpec p = random_probe(2, rng);
            const double a = p.angles[0], g = p.phases[0];
            const int t = 1 + i % 8;
            const double limit = qfi_pure(simulate(rotation_coin(2, axis, 1e-5), p, t));
            const double expect_limit = oracles::qfi_xy2_special(axis, oracles::XyTag::limit0, a, g, t);
            worst_limit = std::max(worst_limit, std::abs(limit - expect_limit));
            if (std::abs(limit - expect_limit) > 1e-5)
                v.fail(fmt("limit t=%g H=%.10g expected %.10g", t, limit, expect_limit));
            for (int tt : {2 + 2 * (i % 4), 1 + 2 * (i % 4)}) {
                const auto tag = tt % 2 == 0 ? oracles::XyTag::pi_even : oracles::XyTag::pi_odd;
                const double h = qfi_pure(simulate(rotation_coin(2, axis, kPi), p, tt));
                const double e = oracles::qfi_xy2_special(axis, tag, a, g, tt);
                worst_pi = std::max(worst_pi, std::abs(h - e));
                if (std::abs(h - e) > 1e-8)
                    v.fail(fmt("theta=pi t=%g H=%.12g expected %.12g", tt, h, e));
            }
        }
    v.detail << (v.detail.tellp() > 0 ? "; " : "")
             << fmt("max |dev| limit %.2e, theta=pi %.2e", worst_limit, worst_pi);
    return v;
}

// 5. Maximum over theta and probes for x/y rotations.
Verdict criterion_5() {
    Verdict v;
    const std::vector<double> grid = theta_grid(24);
    std::ostringstream seen;
    for (int d = 2; d <= 4; ++d) {
        double worst = 0.0, worst_theta = 0.0;
        int worst_t = 0;
        for (Axis axis : {Axis::x, Axis::y})
            for (int t = 1; t <= 6; ++t) {
                OptimizeOptions o = default_optimize_options(d);
                const ThetaProbeMaximum m = maximize_over_theta(CoinFamily::rotation(d, axis), t, grid, Lattice{5, 2}, o, 3);
                const double expected = oracles::qfi_xy_scaling(d, oracles::XyQuantity::max_over_theta, t);
                const double dev = rel(m.probe.best_value, expected);
                if (dev > worst) {
                    worst = dev;
                    worst_t = t;
                    worst_theta = m.theta;
                }
                if (dev > 1e-5)
                    v.fail(to_string(axis) + fmt(" D=%g t=%g: max H=%.8g expected %.8g", d, t, m.probe.best_value, expected));
            }
        seen << (d > 2 ? ", " : "") << "D=" << d << " worst rel dev " << fmt("%.2e", worst) << " (t=" << worst_t
             << fmt(", theta=%.4f)", worst_theta);
    }
    v.detail << (v.detail.tellp() > 0 ? "; " : "") << seen.str();
    return v;
}

// 6. Long-time rates at t = 40.
Verdict criterion_6() {
    Verdict v;
    const int t = 40;
    const double tt = static_cast<double>(t) * t;
    std::ostringstream seen;
    for (int d = 2; d <= 4; ++d) {
        OptimizeOptions o = default_optimize_options(d);
        o.lattice = Lattice{5, 2};
        const OptimizationResult z = optimize({CoinFamily::rotation(d, Axis::z), 1.0, t}, o);
        const double rz = z.best_value / tt;
        if (rel(rz, oracles::asymptotic_qfi_rate(Axis::z, d)) > 0.02)
            v.fail(fmt("z D=%g: H/t^2=%.6g", d, rz));
        seen << fmt("z D=%g %.4f", d, rz) << ", ";
    }
    const std::vector<double> grid = theta_grid(12);
    for (int d = 2; d <= 4; ++d)
        for (Axis axis : {Axis::x, Axis::y}) {
            OptimizeOptions o = default_optimize_options(d);
            o.lattice = Lattice{5, 2};
            const ThetaProbeMaximum m = maximize_over_theta(CoinFamily::rotation(d, axis), t, grid, Lattice{5, 1}, o, 2);
            const double r = m.probe.best_value / tt;
            const double expected = oracles::asymptotic_qfi_rate(axis, d);
            if (rel(r, expected) > 0.02)
                v.fail(to_string(axis) + fmt(" D=%g: max H/t^2=%.6g expected %.6g", d, r, expected));
            seen << to_string(axis) << fmt(" D=%g %.4f", d, r) << (d == 4 && axis == Axis::y ? "" : ", ");
        }
    v.detail << (v.detail.tellp() > 0 ? "; " : "") << "H/t^2: " << seen.str();
    return v;
}

// 7. Entanglement of the optimal z-probe.
Verdict criterion_7() {
    Verdict v;
    double worst = 0.0;
    for (int d = 2; d <= 4; ++d) {
        Propagator prop;
        const auto chi = make_probe(optimal_probe_z(d));
        const CoinOperator coin = rotation_coin(d, Axis::z, 0.6);
        prop.reset(coin, chi, 20, false);
        for (int t = 1; t <= 20; ++t) {
            prop.advance();
            const double e = entanglement_entropy(prop.psi(), d);
            worst = std::max(worst, std::abs(e - std::log(2.0)));
            if (std::abs(e - std::log(2.0)) > 1e-10)
                v.fail(fmt("D=%g t=%g E=%.14g", d, t, e));
        }
    }
    v.detail << (v.detail.tellp() > 0 ? "; " : "") << fmt("max |E - ln 2| %.2e", worst);
    return v;
}

// 8. Grover identities and the D = 3 optimal probe.
Verdict criterion_8() {
    Verdict v;
    std::mt19937_64 rng(8);
    double worst_h = 0.0, worst_r = 0.0;
    for (int k = 1; k <= 9; ++k) {
        const double th = 0.1 * k;
        const double tilde = 2.0 * std::acos(th);
        for (int t = 1; t <= 6; ++t)
            for (int s = 0; s < 3; ++s) {
                const ProbeSpec p = s == 0 ? ProbeSpec::basis_lowest(2) : random_probe(2, rng);
                const DerivativePair g = simulate(grover_coin(2, th), p, t);
                const DerivativePair c = simulate(grover_rotation_form(tilde), p, t);
                const double hg = qfi_pure(g), hc = qfi_pure(c);
                const double dev = rel(hg, reparametrized_qfi(hc, th));
                worst_h = std::max(worst_h, dev);
                if (dev > 1e-8)
                    v.fail(fmt("theta=%g t=%g H_G=%.12g 4H/(1-th^2)=%.12g", th, t, hg, reparametrized_qfi(hc, th)));
                const auto rg = fi_qfi_ratio(fi_position(g).value, hg);
                const auto rc = fi_qfi_ratio(fi_position(c).value, hc);
                if (rg && rc) {
                    worst_r = std::max(worst_r, std::abs(*rg - *rc));
                    if (std::abs(*rg - *rc) > 1e-10)
                        v.fail(fmt("theta=%g t=%g R=%.14g vs %.14g", th, t, *rg, *rc));
                }
            }
    }
    // The D = 3 basis state |0> should attain the optimum at the Grover point.
    const double th3 = 1.0 / std::sqrt(3.0);
    const ProbeSpec zero(3, {kPi, kPi}, {0.0, 0.0});
    for (int t = 1; t <= 6; ++t) {
        const ProbeProblem problem{CoinFamily::grover(3), th3, t};
        const OptimizationResult best = optimize(problem, default_optimize_options(3));
        const double h0 = ProbeObjective(problem)(zero);
        if (rel(h0, best.best_value) > 1e-6)
            v.fail(fmt("D=3 t=%g: H(|0>)=%.8g below max %.8g", t, h0, best.best_value));
    }
    v.detail << (v.detail.tellp() > 0 ? "; " : "")
             << fmt("max rel dev Jacobian identity %.2e, max |dR| %.2e", worst_h, worst_r);
    return v;
}

// 9. Fidelity estimator against the derivative-propagation QFI.
Verdict criterion_9() {
    Verdict v;
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi), unit(0.05, 0.9);
    double worst = 0.0;
    int done = 0;
    while (done < 100) {
        const int d = 2 + static_cast<int>(rng() % 3);
        const int kind = static_cast<int>(rng() % 5);
        CoinFamily f = kind < 3 ? CoinFamily::rotation(d, static_cast<Axis>(kind))
                                : kind == 3 && d >= 3 ? CoinFamily::embedded_z(d)
                                                       : CoinFamily::grover(2 + static_cast<int>(rng() % 2));
        const double th = f.kind == CoinKind::grover ? unit(rng) : angle(rng);
        const ProbeSpec p = random_probe(f.dimension, rng);
        const int t = 1 + static_cast<int>(rng() % 10);
        const double h = qfi_pure(simulate(f.at(th), p, t));
        if (h < 1e-6)
            continue;
        const double est = qfi_fidelity(f, th, p, t).value;
        worst = std::max(worst, rel(est, h));
        if (rel(est, h) > 1e-4)
            v.fail(fmt("scenario %g: fidelity %.10g vs %.10g", done, est, h));
        ++done;
    }
    v.detail << (v.detail.tellp() > 0 ? "; " : "") << fmt("100 scenarios, max rel dev %.2e", worst);
    return v;
}

// 10. Parthasarathy minimum against a random-state cloud.
Verdict criterion_10() {
    Verdict v;
    std::mt19937_64 rng(10);
    std::normal_distribution<double> normal;
    std::ostringstream seen;
    for (int d = 2; d <= 4; ++d) {
        const int t = 2;
        const double dtheta = 0.1;
        const oracles::ParthasarathyMinimum closed = oracles::parthasarathy_min(d, t, dtheta);
        // W = exp(-i t dtheta T_z) has eigenphases m t dtheta.
        const CoinOperator w = rotation_coin(d, Axis::z, t * dtheta);
        double sampled = 1.0;
        std::vector<Complex> phi(d);
        for (int i = 0; i < 100000; ++i) {
            double norm = 0.0;
            for (auto& c : phi) {
                c = Complex(normal(rng), normal(rng));
                norm += std::norm(c);
            }
            Complex overlap = 0.0;
            for (int k = 0; k < d; ++k)
                overlap += std::norm(phi[k]) / norm * w.matrix(k, k);
            sampled = std::min(sampled, std::norm(overlap));
        }
        // The equal superposition of the extreme shifts attains the bound.
        const Complex extreme = 0.5 * (w.matrix(0, 0) + w.matrix(d - 1, d - 1));
        if (sampled < closed.min_overlap_sq - 1e-6)
            v.fail(fmt("D=%g sampled %.10g below closed %.10g", d, sampled, closed.min_overlap_sq));
        if (std::abs(std::norm(extreme) - closed.min_overlap_sq) > 1e-12)
            v.fail(fmt("D=%g extreme pair gives %.12g", d, std::norm(extreme)));
        if (closed.lower_shift != -CoinIndexMap(d).max_shift() || closed.upper_shift != CoinIndexMap(d).max_shift())
            v.fail(fmt("D=%g minimizing pair is not the extreme shifts", d));
        seen << (d > 2 ? ", " : "") << fmt("D=%g sampled-closed %.2e", d, sampled - closed.min_overlap_sq);
    }
    v.detail << (v.detail.tellp() > 0 ? "; " : "") << seen.str();
    return v;
}

// 11. Property suite.
Verdict criterion_11() {
    Verdict v;
    verify::SuiteOptions options;
    std::vector<verify::CheckOutcome> all;
    for (auto suite : {verify::coin_properties, verify::walk_properties, verify::metrology_properties})
        for (auto& c : suite(options))
            all.push_back(c);
    const std::set<std::string> required{"coin-unitarity", "norm-preservation", "light-cone", "fi-below-qfi",
                                         "recurrence-vs-expansion"};
    int found = 0;
    for (const auto& c : all) {
        found += required.count(c.id) ? 1 : 0;
        if (!c.passed)
            v.fail(c.id + fmt(" dev %.3g tol %.3g", c.deviation, c.tolerance));
    }
    if (found != static_cast<int>(required.size()))
        v.fail("required property missing");
    v.detail << (v.detail.tellp() > 0 ? "; " : "") << all.size() << " properties checked";
    return v;
}

// Note: FI landscapes for R_y, D = 2 are checked qualitatively.
Verdict criterion_fi_landscape() {
    Verdict v;
    double worst = 0.0;
    bool non_monotone = false;
    for (int k = 0; k <= 12; ++k) {
        const double th = kTwoPi * k / 12.0 + 0.05;
        for (int a = 0; a <= 20; ++a) {
            const ProbeSpec p(2, {kPi * a / 20.0}, {0.0});
            worst = std::max(worst, std::abs(fi_position(simulate(rotation_coin(2, Axis::y, th), p, 1)).value - 1.0));
            double previous = -1.0;
            for (int t = 1; t <= 6 && !non_monotone; ++t) {
                const double f = fi_position(simulate(rotation_coin(2, Axis::y, th), p, t)).value;
                if (f < previous - 1e-9)
                    non_monotone = true;
                previous = f;
            }
        }
    }
    if (worst > 1e-10)
        v.fail(fmt("t=1 column deviates from 1 by %.3g", worst));
    if (!non_monotone)
        v.fail("FI is monotone in t everywhere sampled");
    v.detail << (v.detail.tellp() > 0 ? "; " : "") << fmt("max |F(t=1) - 1| %.2e, non-monotone in t: yes", worst);
    return v;
}

// Note: the FI/QFI ratio for R_y, D = 3, probe |0> should approach its limit
// from below along even t and from above along odd t, for t <= 60.
Verdict criterion_ratio_trend() {
    Verdict v;
    const std::vector<Complex> chi = make_probe(ProbeSpec(3, {kPi, kPi}, {0.0, 0.0}));
    std::ostringstream seen;
    int broken = 0;
    for (double th : {kPi / 6, kPi / 4, kPi / 3, kPi / 2, 2 * kPi / 3, 5 * kPi / 6}) {
        Propagator walk;
        walk.reset(rotation_coin(3, Axis::y, th), chi, 60);
        double last[2] = {-1.0, 2.0};
        int breaks = 0;
        for (int t = 1; t <= 60; ++t) {
            walk.advance();
            const auto r = fi_qfi_ratio(fi_position(walk.view()).value, qfi_pure(walk.view()));
            if (!r)
                continue;
            // even t: non-decreasing; odd t: non-increasing
            if (t % 2 == 0 ? *r < last[0] - 1e-12 : *r > last[1] + 1e-12)
                ++breaks;
            last[t % 2] = *r;
        }
        broken += breaks > 0 ? 1 : 0;
        seen << (seen.tellp() > 0 ? ", " : "") << fmt("theta=%.4f %g breaks", th, breaks);
    }
    if (broken > 0)
        v.fail(fmt("trend broken at %g of 6 theta values", broken));
    v.detail << "; " << seen.str();
    return v;
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"1", criterion_1},
        {"2", criterion_2},
        {"3", criterion_3},
        {"4", criterion_4},
        {"5", criterion_5},
        {"6", criterion_6},
        {"7", criterion_7},
        {"8", criterion_8},
        {"9", criterion_9},
        {"10", criterion_10},
        {"11", criterion_11},
        {"ratio-trend", criterion_ratio_trend},
        {"fi-landscape", criterion_fi_landscape}};
    std::set<std::string> only(argv + 1, argv + argc);
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        if (!only.empty() && !only.count(name))
            continue;
        const auto start = std::chrono::steady_clock::now();
        Verdict v = run();
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %-12s %s (%.1fs): %s\n", name.c_str(), v.passed ? "PASS" : "FAIL", seconds,
                    v.detail.str().c_str());
        std::fflush(stdout);
        failures += v.passed ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
