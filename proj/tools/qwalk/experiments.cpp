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
#include "experiments.hpp"

#include <cmath>
#include <optional>

#include "qwalk/metrology.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::cli {

namespace {

std::string axis_label(const CoinFamily& f) { return f.kind == CoinKind::rotation ? to_string(f.axis) : ""; }

std::vector<std::string> report_columns(int d) {
    std::vector<std::string> c{"family", "dimension", "axis", "theta", "t", "qfi", "fi", "ratio", "entropy", "crlb",
                               "fi_boundary_warning"};
    for (int i = 1; i < d; ++i)
        c.push_back("alpha_" + std::to_string(i));
    for (int i = 1; i < d; ++i)
        c.push_back("gamma_" + std::to_string(i));
    return c;
}

std::vector<Cell> report_row(const CoinFamily& f, const MetrologyReport& r, const ProbeSpec& probe) {
    std::vector<Cell> row{to_string(f.kind),
                          static_cast<std::int64_t>(f.dimension),
                          axis_label(f),
                          r.theta,
                          static_cast<std::int64_t>(r.t),
                          r.qfi,
                          r.fi,
                          r.ratio ? Cell(*r.ratio) : Cell(),
                          r.entropy,
                          r.crlb,
                          r.fi_boundary_warning};
    for (double a : probe.angles)
        row.emplace_back(a);
    for (double g : probe.phases)
        row.emplace_back(g);
    return row;
}

MetrologyReport report_at(const CoinFamily& family, double theta, const ProbeSpec& probe, int t) {
    return analyze(simulate(family.at(theta), probe, t), theta);
}

/// Runs body(i) for i in [0, n) across threads; results land in caller-owned
/// slots, so the output order never depends on scheduling.
template <class Body>
void for_cells(int n, Body body) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < n; ++i)
        body(i);
}

} // namespace

Table run_sweep(const ExperimentConfig& config) {
    const CoinFamily& f = config.family;
    Table table;
    table.columns = report_columns(f.dimension);
    table.plot = PlotSpec{"theta", "qfi", "t", f.describe()};
    const int nt = static_cast<int>(config.times.size());
    const int cells = static_cast<int>(config.thetas.size()) * nt;
    std::vector<std::vector<Cell>> rows(cells);

    if (config.optimize_probe) {
        for_cells(cells, [&](int i) {
            const double theta = config.thetas[i / nt];
            const int t = config.times[i % nt];
            OptimizeOptions options = config.optimize;
            options.exec = Execution::serial;
            const OptimizationResult r = optimize({f, theta, t, config.objective}, options);
            rows[i] = report_row(f, report_at(f, theta, r.best_probe, t), r.best_probe);
        });
    } else {
        // One walk per theta, sampled at every requested time.
        const std::vector<Complex> chi = make_probe(config.probe);
        for_cells(static_cast<int>(config.thetas.size()), [&](int k) {
            const double theta = config.thetas[k];
            Propagator walk;
            walk.reset(f.at(theta), chi, config.times.back());
            for (int j = 0; j < nt; ++j) {
                while (walk.time() < config.times[j])
                    walk.advance(Execution::serial);
                rows[k * nt + j] = report_row(f, analyze(walk.view(), theta, walk.time()), config.probe);
            }
        });
    }
    for (auto& row : rows)
        table.add(std::move(row));
    return table;
}

OptimizeOutput run_optimize(const ExperimentConfig& config) {
    const CoinFamily& f = config.family;
    const int d = f.dimension;
    OptimizeOutput out;
    out.results.columns = report_columns(d);
    for (const char* c : {"objective", "best_value", "evaluations", "converged", "grid_resolution", "phase_resolution"})
        out.results.columns.push_back(c);
    out.results.plot = PlotSpec{"t", "best_value", "theta", "optimized " + to_string(config.objective) + ", " + f.describe()};
    out.trajectory.columns = {"theta", "t", "evaluation", "value"};
    for (int i = 0; i < 2 * (d - 1); ++i)
        out.trajectory.columns.push_back("x_" + std::to_string(i + 1));

    const int nt = static_cast<int>(config.times.size());
    const int cells = static_cast<int>(config.thetas.size()) * nt;
    std::vector<OptimizationResult> results(cells);
    for_cells(cells, [&](int i) {
        OptimizeOptions options = config.optimize;
        options.exec = Execution::serial;
        options.refine.record_trajectory = config.trajectory;
        results[i] = optimize({f, config.thetas[i / nt], config.times[i % nt], config.objective}, options);
    });

    for (int i = 0; i < cells; ++i) {
        const double theta = config.thetas[i / nt];
        const int t = config.times[i % nt];
        const OptimizationResult& r = results[i];
        std::vector<Cell> row = report_row(f, report_at(f, theta, r.best_probe, t), r.best_probe);
        row.emplace_back(to_string(r.objective));
        row.emplace_back(r.best_value);
        row.emplace_back(static_cast<std::int64_t>(r.evaluations));
        row.emplace_back(r.converged);
        row.emplace_back(static_cast<std::int64_t>(r.grid_resolution));
        row.emplace_back(static_cast<std::int64_t>(r.phase_resolution));
        out.results.add(std::move(row));
        for (const TrajectoryPoint& p : r.trajectory) {
            std::vector<Cell> tr{theta, static_cast<std::int64_t>(t), static_cast<std::int64_t>(p.evaluation), p.value};
            for (double x : p.coordinates)
                tr.emplace_back(x);
            tr.resize(out.trajectory.columns.size());
            out.trajectory.add(std::move(tr));
        }
    }
    return out;
}

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids{"1a", "1b", "2", "3a", "3b", "3c", "3d", "4", "5a", "5b", "5c"};
    return ids;
}

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    return v;
}

int pick(int requested, int fallback) { return requested > 0 ? requested : fallback; }

std::string series_label(const std::string& key, double value) { return key + "=" + format_double(value); }
std::string series_label(const std::string& key, int value) { return key + "=" + std::to_string(value); }

/// H (or F) against theta for t = 1..t_max, one series per t.
Table theta_curves(const CoinFamily& family, const ProbeSpec& probe, const std::vector<double>& thetas, int t_max,
                   const std::string& quantity, const std::string& title) {
    Table table;
    table.columns = {"series", "theta", "t", quantity};
    table.plot = PlotSpec{"theta", quantity, "series", title};
    const int n = static_cast<int>(thetas.size());
    std::vector<std::vector<double>> values(n, std::vector<double>(t_max));
    const std::vector<Complex> chi = make_probe(probe);
    for_cells(n, [&](int k) {
        Propagator walk;
        walk.reset(family.at(thetas[k]), chi, t_max);
        for (int t = 1; t <= t_max; ++t) {
            walk.advance(Execution::serial);
            values[k][t - 1] = quantity == "fi" ? fi_position(walk.view()).value : qfi_pure(walk.view());
        }
    });
    for (int t = 1; t <= t_max; ++t)
        for (int k = 0; k < n; ++k)
            table.add({series_label("t", t), thetas[k], static_cast<std::int64_t>(t), values[k][t - 1]});
    return table;
}

Table fi_over_alpha(double theta, int t_max, int count, const std::string& title) {
    Table table;
    table.columns = {"series", "alpha_1", "t", "fi"};
    table.plot = PlotSpec{"alpha_1", "fi", "series", title};
    const std::vector<double> alphas = linspace(0.0, kPi, count);
    std::vector<std::vector<double>> values(count, std::vector<double>(t_max));
    const CoinOperator coin = rotation_coin(2, Axis::y, theta);
    for_cells(count, [&](int k) {
        Propagator walk;
        walk.reset(coin, make_probe(ProbeSpec(2, {alphas[k]}, {0.0})), t_max);
        for (int t = 1; t <= t_max; ++t) {
            walk.advance(Execution::serial);
            values[k][t - 1] = fi_position(walk.view()).value;
        }
    });
    for (int t = 1; t <= t_max; ++t)
        for (int k = 0; k < count; ++k)
            table.add({series_label("t", t), alphas[k], static_cast<std::int64_t>(t), values[k][t - 1]});
    return table;
}

Table ratio_over_time(int t_max) {
    Table table;
    table.columns = {"series", "theta", "t", "fi", "qfi", "ratio"};
    table.plot = PlotSpec{"t", "ratio", "series", "F/H, R_y D=3, probe |0>"};
    const std::vector<double> thetas{0.0, kPi / 6, kPi / 4, kPi / 3, kPi / 2, 2 * kPi / 3, 5 * kPi / 6};
    const int n = static_cast<int>(thetas.size());
    std::vector<std::vector<std::pair<double, double>>> values(n, std::vector<std::pair<double, double>>(t_max));
    const std::vector<Complex> chi = make_probe(ProbeSpec(3, {kPi, kPi}, {0.0, 0.0}));
    for_cells(n, [&](int k) {
        Propagator walk;
        walk.reset(rotation_coin(3, Axis::y, thetas[k]), chi, t_max);
        for (int t = 1; t <= t_max; ++t) {
            walk.advance(Execution::serial);
            values[k][t - 1] = {fi_position(walk.view()).value, qfi_pure(walk.view())};
        }
    });
    for (int k = 0; k < n; ++k)
        for (int t = 1; t <= t_max; ++t) {
            const auto [fi, h] = values[k][t - 1];
            const auto r = fi_qfi_ratio(fi, h);
            table.add({series_label("theta", thetas[k]), thetas[k], static_cast<std::int64_t>(t), fi, h,
                       r ? Cell(*r) : Cell()});
        }
    return table;
}

Table asymptotic_rates(int t_max, int theta_count) {
    Table table;
    table.columns = {"series", "axis", "dimension", "t", "theta_star", "max_qfi", "max_qfi_over_t2"};
    table.plot = PlotSpec{"t", "max_qfi_over_t2", "series", "max over theta and probe of H / t^2"};
    struct Cellspec {
        Axis axis;
        int d;
        int t;
    };
    std::vector<Cellspec> specs;
    for (Axis axis : {Axis::z, Axis::x, Axis::y})
        for (int d = 2; d <= 4; ++d)
            for (int t = 1; t <= t_max; ++t)
                specs.push_back({axis, d, t});
    std::vector<std::pair<double, double>> values(specs.size());
    const std::vector<double> grid = linspace(0.0, kTwoPi, theta_count);
    for_cells(static_cast<int>(specs.size()), [&](int i) {
        const auto [axis, d, t] = specs[i];
        OptimizeOptions options = default_optimize_options(d);
        options.exec = Execution::serial;
        options.lattice = d == 2 ? options.lattice : Lattice{5, 2};
        if (axis == Axis::z) {
            // The z-rotation QFI does not depend on theta.
            values[i] = {0.0, optimize({CoinFamily::rotation(d, axis), 0.0, t}, options).best_value};
        } else {
            const ThetaProbeMaximum m =
                maximize_over_theta(CoinFamily::rotation(d, axis), t, grid, Lattice{5, 1}, options, 2);
            values[i] = {m.theta, m.probe.best_value};
        }
    });
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto [axis, d, t] = specs[i];
        table.add({to_string(axis) + " D=" + std::to_string(d), to_string(axis), static_cast<std::int64_t>(d),
                   static_cast<std::int64_t>(t), values[i].first, values[i].second,
                   values[i].second / (static_cast<double>(t) * t)});
    }
    return table;
}

Table grover_curves(int d, int t_max, int theta_count) {
    const ProbeSpec probe = d == 2 ? ProbeSpec::basis_lowest(2) : ProbeSpec(3, {kPi, kPi}, {0.0, 0.0});
    Table table = theta_curves(CoinFamily::grover(d), probe, linspace(0.0, 0.99, theta_count), t_max, "qfi",
                               "Grover D=" + std::to_string(d) + (d == 2 ? ", probe |-1>" : ", probe |0>"));
    if (d == 2)
        for (double theta : linspace(0.0, 0.99, theta_count))
            table.add({"reference 2/(1-theta^2)", theta, Cell(), 2.0 / (1.0 - theta * theta)});
    return table;
}

Table grover_times(int t_max) {
    Table table;
    table.columns = {"series", "dimension", "theta", "t", "qfi"};
    table.plot = PlotSpec{"t", "qfi", "series", "Grover walks against t"};
    const std::vector<std::pair<std::string, std::pair<int, double>>> cases{
        {"hadamard D=2", {2, 1.0 / std::sqrt(2.0)}},
        {"grover D=3", {3, 1.0 / std::sqrt(3.0)}},
        {"D=2 theta=1/2", {2, 0.5}},
        {"D=3 theta=1/2", {3, 0.5}}};
    for (const auto& [label, spec] : cases) {
        const auto [d, theta] = spec;
        const ProbeSpec probe = d == 2 ? ProbeSpec::basis_lowest(2) : ProbeSpec(3, {kPi, kPi}, {0.0, 0.0});
        Propagator walk;
        walk.reset(grover_coin(d, theta), make_probe(probe), t_max);
        for (int t = 1; t <= t_max; ++t) {
            walk.advance();
            table.add({label, static_cast<std::int64_t>(d), theta, static_cast<std::int64_t>(t), qfi_pure(walk.view())});
        }
    }
    return table;
}

} // namespace

Table figure_table(const std::string& id, const FigureSettings& s) {
    const std::string axis = to_string(s.axis);
    if (id == "1a")
        return theta_curves(CoinFamily::rotation(2, s.axis), ProbeSpec(2, {0.0}, {0.0}),
                            linspace(0.0, 4 * kPi, pick(s.theta_count, 161)), pick(s.t_max, 6), "qfi",
                            "H for R_" + axis + " D=2, probe alpha_1=0");
    if (id == "1b")
        return theta_curves(CoinFamily::rotation(3, s.axis), ProbeSpec(3, {kPi, kPi}, {0.0, 0.0}),
                            linspace(0.0, 4 * kPi, pick(s.theta_count, 161)), pick(s.t_max, 6), "qfi",
                            "H for R_" + axis + " D=3, probe |0>");
    if (id == "2")
        return ratio_over_time(pick(s.t_max, 60));
    if (id == "3a" || id == "3b")
        return theta_curves(CoinFamily::rotation(2, Axis::y), ProbeSpec(2, {id == "3a" ? 0.0 : kPi / 4}, {0.0}),
                            linspace(0.0, kTwoPi, pick(s.theta_count, 121)), pick(s.t_max, 6), "fi",
                            std::string("F for R_y D=2, alpha_1=") + (id == "3a" ? "0" : "pi/4"));
    if (id == "3c")
        return fi_over_alpha(kPi / 3, pick(s.t_max, 6), pick(s.theta_count, 91), "F for R_y D=2, theta=pi/3");
    if (id == "3d")
        return fi_over_alpha(kPi / 2, pick(s.t_max, 6), pick(s.theta_count, 91), "F for R_y D=2, theta=pi/2");
    if (id == "4")
        return asymptotic_rates(pick(s.t_max, 20), pick(s.theta_count, 25));
    if (id == "5a")
        return grover_curves(2, pick(s.t_max, 6), pick(s.theta_count, 100));
    if (id == "5b")
        return grover_curves(3, pick(s.t_max, 6), pick(s.theta_count, 100));
    if (id == "5c")
        return grover_times(pick(s.t_max, 20));
    std::string known;
    for (const auto& k : figure_ids())
        known += (known.empty() ? "" : ", ") + k;
    throw ConfigError("figure", "unknown id '" + id + "' (known: " + known + ")");
}

} // namespace qwalk::cli
