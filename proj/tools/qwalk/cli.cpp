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
#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <omp.h>

#include "config.hpp"
#include "experiments.hpp"
#include "qwalk/verify.hpp"

namespace qwalk::cli {

int resolve_threads(const char* env, int flag) {
    if (env && *env) {
        const std::string text(env);
        std::size_t used = 0;
        int n = -1;
        try {
            n = std::stoi(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != text.size() || n < 1)
            throw ConfigError("QWALK_THREADS", "'" + text + "' is not a positive integer");
        return n;
    }
    if (flag < 0)
        throw ConfigError("--threads", "must be >= 0");
    return flag;
}

namespace {

struct Common {
    std::string config;
    std::string out = ".";
    std::string format;
    int threads = 0;
    long long seed = -1;
};

namespace fs = std::filesystem;

/// Writes table in every requested format as dir/stem.ext.
void emit(const Table& table, const Common& common, const std::vector<std::string>& config_formats,
          const std::string& stem, std::ostream& log) {
    std::vector<std::string> formats;
    if (!common.format.empty())
        formats.push_back(common.format);
    for (const auto& f : config_formats)
        if (common.format.empty() ? true : f == "svg")
            formats.push_back(f);
    fs::create_directories(common.out);
    for (const auto& f : formats) {
        const fs::path path = fs::path(common.out) / (stem + "." + f);
        std::ofstream file(path, std::ios::binary);
        if (!file)
            throw ConfigError("--out", "cannot write '" + path.string() + "'");
        if (f == "csv")
            write_csv(file, table);
        else if (f == "jsonl")
            write_jsonl(file, table);
        else if (table.plot)
            write_svg(file, table);
        log << "wrote " << path.string() << " (" << table.rows.size() << " rows)\n";
    }
}

ExperimentConfig experiment(const Common& common, const std::string& name) {
    ExperimentConfig c = read_experiment(load_config(common.config), name);
    if (common.seed >= 0)
        c.optimize.seed = static_cast<std::uint64_t>(common.seed);
    return c;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete-time quantum walk metrology experiments", "qwalk"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--out", common.out, "Output directory")->capture_default_str();
    app.add_option("--format", common.format, "Table format, overrides the config")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    app.add_option("--threads", common.threads, "Worker threads, 0 for the runtime default (QWALK_THREADS wins)");
    app.add_option("--seed", common.seed, "Seed for multi-start optimization and property sampling")
        ->check(CLI::NonNegativeNumber);

    CLI::App* sweep = app.add_subcommand("sweep", "Metrology report on a (theta, t) grid");
    sweep->add_option("--config", common.config, "Experiment config file")->required();
    CLI::App* optimize = app.add_subcommand("optimize", "Probe optimization on a (theta, t) grid");
    optimize->add_option("--config", common.config, "Experiment config file")->required();
    CLI::App* figure = app.add_subcommand("figure", "Data behind one figure panel");
    std::string figure_id;
    bool svg = false;
    figure->add_option("id", figure_id, "Figure id")->required();
    figure->add_option("--config", common.config, "Optional figure settings (figure.t_max, figure.theta_count, figure.axis)");
    figure->add_flag("--svg", svg, "Also write an SVG rendering");
    CLI::App* verify = app.add_subcommand("verify", "Oracle table and property suites");
    double scale = 1.0;
    bool inject = false;
    verify->add_option("--scale", scale, "Scale of the random property sample counts")->check(CLI::PositiveNumber);
    verify->add_flag("--inject-fault", inject)->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        err << "qwalk: " << e.what() << "\n" << "run 'qwalk --help' for usage\n";
        return kExitUsage;
    }

    try {
        const int threads = resolve_threads(std::getenv("QWALK_THREADS"), common.threads);
        if (threads > 0)
            omp_set_num_threads(threads);

        if (sweep->parsed()) {
            const ExperimentConfig c = experiment(common, "sweep");
            emit(run_sweep(c), common, c.formats, c.name, out);
        } else if (optimize->parsed()) {
            const ExperimentConfig c = experiment(common, "optimize");
            const OptimizeOutput r = run_optimize(c);
            emit(r.results, common, c.formats, c.name, out);
            if (c.trajectory)
                emit(r.trajectory, common, {"csv"}, c.name + "_trajectory", out);
        } else if (figure->parsed()) {
            FigureSettings settings;
            if (!common.config.empty()) {
                const ConfigFile file = load_config(common.config);
                ConfigReader r(file);
                settings.t_max = static_cast<int>(r.integer("figure.t_max", 0, 1, kMaxConfigTime));
                settings.theta_count = static_cast<int>(r.integer("figure.theta_count", 0, 2, 100000));
                settings.axis = parse_axis(r.choice("figure.axis", {"x", "y"}, "y"));
                r.reject_unknown();
            }
            const Table table = figure_table(figure_id, settings);
            std::vector<std::string> formats{"csv"};
            if (svg)
                formats.push_back("svg");
            emit(table, common, formats, "figure_" + figure_id, out);
        } else if (verify->parsed()) {
            verify::SuiteOptions options;
            if (common.seed >= 0)
                options.seed = static_cast<std::uint64_t>(common.seed);
            options.sample_scale = scale;
            options.fault = inject ? verify::Fault::flip_derivative_term : verify::Fault::none;
            const verify::Summary summary = verify::run_verify(options);
            fs::create_directories(common.out);
            const fs::path cases = fs::path(common.out) / "verify_cases.jsonl";
            const fs::path report = fs::path(common.out) / "verify_summary.json";
            {
                std::ofstream file(cases, std::ios::binary);
                for (const auto& c : summary.checks)
                    file << verify::to_json(c) << '\n';
                std::ofstream json(report, std::ios::binary);
                json << verify::summary_json(summary) << '\n';
                if (!file || !json)
                    throw ConfigError("--out", "cannot write verification results");
            }
            for (const auto& c : summary.checks)
                if (!c.passed)
                    err << "FAIL " << c.id << " deviation " << c.deviation << " tolerance " << c.tolerance << '\n';
            out << summary.checks.size() - summary.failures() << "/" << summary.checks.size() << " checks passed\n"
                << "wrote " << cases.string() << " and " << report.string() << '\n';
            return summary.passed() ? kExitSuccess : kExitVerification;
        }
    } catch (const ConfigError& e) {
        err << "qwalk: invalid configuration: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "qwalk: " << e.what() << '\n';
        return kExitUsage;
    } catch (const fs::filesystem_error& e) {
        err << "qwalk: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitSuccess;
}

} // namespace qwalk::cli
