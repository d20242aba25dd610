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
#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "table.hpp"

namespace qwalk::cli {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        out.push_back(trim(item));
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

std::optional<double> parse_factor(const std::string& f) {
    if (f == "pi")
        return kPi;
    if (f.rfind("sqrt(", 0) == 0 && f.size() > 6 && f.back() == ')') {
        const auto inner = parse_number(f.substr(5, f.size() - 6));
        if (!inner || *inner < 0.0)
            return std::nullopt;
        return std::sqrt(*inner);
    }
    return parse_double(f);
}

} // namespace

std::optional<double> parse_number(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.empty())
        return std::nullopt;
    // Left-to-right product and quotient of factors.
    double value = 1.0;
    char op = '*';
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        const char c = i < text.size() ? text[i] : '\0';
        depth += c == '(' ? 1 : c == ')' ? -1 : 0;
        if ((c == '*' || c == '/' || c == '\0') && depth == 0) {
            std::string factor = trim(text.substr(start, i - start));
            double sign = 1.0;
            if (start == 0 && factor.size() > 1 && factor[0] == '-' && !parse_double(factor)) {
                sign = -1.0;
                factor = trim(factor.substr(1));
            }
            const auto f = parse_factor(factor);
            if (!f)
                return std::nullopt;
            value = op == '*' ? value * sign * *f : value / (sign * *f);
            op = c;
            start = i + 1;
        }
    }
    return value;
}

ConfigFile parse_config(std::istream& in) {
    ConfigFile file;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        const std::string where = "line " + std::to_string(number);
        if (eq == std::string::npos)
            throw ConfigError(where, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty() || key.find_first_not_of("abcdefghijklmnopqrstuvwxyz0123456789_.") != std::string::npos)
            throw ConfigError(where, "invalid key '" + key + "'");
        if (file.entries.count(key))
            throw ConfigError(key, "duplicate key on " + where);
        file.entries[key] = {trim(line.substr(eq + 1)), number};
    }
    return file;
}

ConfigFile load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("--config", "cannot open '" + path + "'");
    return parse_config(in);
}

std::optional<std::string> ConfigReader::text(const std::string& key) {
    used_.insert(key);
    const auto it = file_.entries.find(key);
    if (it == file_.entries.end())
        return std::nullopt;
    return it->second.value;
}

std::string ConfigReader::choice(const std::string& key, const std::vector<std::string>& allowed,
                                 const std::string& fallback) {
    const auto v = text(key);
    if (!v)
        return fallback;
    if (std::find(allowed.begin(), allowed.end(), *v) == allowed.end()) {
        std::string list;
        for (const auto& a : allowed)
            list += (list.empty() ? "" : ", ") + a;
        throw ConfigError(key, "'" + *v + "' is not one of {" + list + "}");
    }
    return *v;
}

double ConfigReader::number(const std::string& key, double fallback) {
    const auto v = text(key);
    if (!v)
        return fallback;
    const auto d = parse_number(*v);
    if (!d || !std::isfinite(*d))
        throw ConfigError(key, "'" + *v + "' is not a finite number");
    return *d;
}

long long ConfigReader::integer(const std::string& key, long long fallback, long long lo, long long hi) {
    const auto v = text(key);
    if (!v)
        return fallback;
    std::size_t used = 0;
    long long n = 0;
    try {
        n = std::stoll(*v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v->size())
        throw ConfigError(key, "'" + *v + "' is not an integer");
    if (n < lo || n > hi)
        throw ConfigError(key, std::to_string(n) + " is outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return n;
}

bool ConfigReader::boolean(const std::string& key, bool fallback) {
    const auto v = text(key);
    if (!v)
        return fallback;
    if (*v == "true" || *v == "1" || *v == "yes")
        return true;
    if (*v == "false" || *v == "0" || *v == "no")
        return false;
    throw ConfigError(key, "'" + *v + "' is not a boolean");
}

std::vector<double> ConfigReader::numbers(const std::string& key) {
    std::vector<double> out;
    const auto v = text(key);
    if (!v || trim(*v).empty())
        return out;
    const auto items = split(*v, ',');
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto d = parse_number(items[i]);
        if (!d || !std::isfinite(*d))
            throw ConfigError(key + "[" + std::to_string(i) + "]", "'" + items[i] + "' is not a finite number");
        out.push_back(*d);
    }
    return out;
}

std::vector<std::string> ConfigReader::words(const std::string& key) {
    std::vector<std::string> out;
    if (const auto v = text(key))
        for (auto& w : split(*v, ','))
            if (!w.empty())
                out.push_back(w);
    return out;
}

void ConfigReader::reject_unknown() const {
    for (const auto& [key, entry] : file_.entries)
        if (!used_.count(key))
            throw ConfigError(key, "unknown key (line " + std::to_string(entry.line) + ")");
}

ExperimentConfig read_experiment(const ConfigFile& file, const std::string& default_name) {
    ConfigReader r(file);
    ExperimentConfig c;

    const std::string family = r.choice(
        "coin.family", {"rotation", "embedded-rotation-z", "embedded-u2", "grover", "grover-rotation-form"}, "rotation");
    const int d = static_cast<int>(r.integer("coin.dimension", 2, 2, 64));
    const Axis axis = parse_axis(r.choice("coin.axis", {"x", "y", "z"}, "z"));
    const double xi = r.number("coin.xi", 0.0), zeta = r.number("coin.zeta", 0.0);
    switch (parse_coin_kind(family)) {
    case CoinKind::rotation:
        c.family = CoinFamily::rotation(d, axis);
        break;
    case CoinKind::embedded_rotation_z:
        if (d < 3)
            throw ConfigError("coin.dimension", "embedded rotation needs D >= 3");
        c.family = CoinFamily::embedded_z(d);
        break;
    case CoinKind::embedded_u2:
        if (d < 3)
            throw ConfigError("coin.dimension", "embedded U(2) needs D >= 3");
        c.family = CoinFamily::embedded_u2(d, xi, zeta);
        break;
    case CoinKind::grover:
        if (d > 3)
            throw ConfigError("coin.dimension", "Grover coins are defined for D = 2, 3");
        c.family = CoinFamily::grover(d);
        break;
    case CoinKind::grover_rotation_form:
        if (d != 2)
            throw ConfigError("coin.dimension", "the rotation form exists only for D = 2");
        c.family = CoinFamily::grover_rotation_form();
        break;
    }

    if (r.has("theta.list")) {
        c.thetas = r.numbers("theta.list");
        for (const char* k : {"theta.min", "theta.max", "theta.count"})
            if (r.has(k))
                throw ConfigError(k, "cannot be combined with theta.list");
    } else {
        const double lo = r.number("theta.min", 0.0);
        const double hi = r.number("theta.max", lo);
        const int n = static_cast<int>(r.integer("theta.count", 1, 1, 1000000));
        if (hi < lo)
            throw ConfigError("theta.max", "must not be below theta.min");
        for (int i = 0; i < n; ++i)
            c.thetas.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    }
    if (c.thetas.empty())
        throw ConfigError("theta.list", "grid must not be empty");
    for (std::size_t i = 0; i < c.thetas.size(); ++i)
        if (!c.family.admits(c.thetas[i]))
            throw ConfigError(r.has("theta.list") ? "theta.list[" + std::to_string(i) + "]" : "theta.max",
                              "theta = " + format_double(c.thetas[i]) + " is outside the domain of " +
                                  c.family.describe());

    if (r.has("t.list")) {
        for (double v : r.numbers("t.list")) {
            if (v != std::floor(v) || v < 1 || v > kMaxConfigTime)
                throw ConfigError("t.list", "entries must be integers in [1, " + std::to_string(kMaxConfigTime) + "]");
            c.times.push_back(static_cast<int>(v));
        }
        for (const char* k : {"t.min", "t.max"})
            if (r.has(k))
                throw ConfigError(k, "cannot be combined with t.list");
    } else {
        const int lo = static_cast<int>(r.integer("t.min", 1, 1, kMaxConfigTime));
        const int hi = static_cast<int>(r.integer("t.max", lo, 1, kMaxConfigTime));
        if (hi < lo)
            throw ConfigError("t.max", "must not be below t.min");
        for (int t = lo; t <= hi; ++t)
            c.times.push_back(t);
    }
    if (c.times.empty())
        throw ConfigError("t.list", "must not be empty");
    std::sort(c.times.begin(), c.times.end());
    c.times.erase(std::unique(c.times.begin(), c.times.end()), c.times.end());

    c.optimize_probe = r.choice("probe.mode", {"fixed", "optimize"}, "fixed") == "optimize";
    const std::vector<double> angles = r.numbers("probe.angles");
    std::vector<double> phases = r.numbers("probe.phases");
    if (c.optimize_probe && (!angles.empty() || !phases.empty()))
        throw ConfigError("probe.mode", "probe angles and phases are not used when optimizing");
    if (angles.empty() && phases.empty()) {
        c.probe = ProbeSpec::basis_lowest(d);
    } else {
        if (angles.size() != static_cast<std::size_t>(d - 1))
            throw ConfigError("probe.angles", "expected " + std::to_string(d - 1) + " values");
        if (phases.empty())
            phases.assign(d - 1, 0.0);
        if (phases.size() != static_cast<std::size_t>(d - 1))
            throw ConfigError("probe.phases", "expected " + std::to_string(d - 1) + " values");
        try {
            c.probe = ProbeSpec(d, angles, phases);
        } catch (const Error& e) {
            throw ConfigError("probe.angles", e.what());
        }
    }

    c.objective = r.choice("optimize.objective", {"qfi", "fi"}, "qfi") == "fi" ? Objective::fi : Objective::qfi;
    c.optimize = default_optimize_options(d);
    c.optimize.lattice.angle_points =
        static_cast<int>(r.integer("optimize.angle_points", c.optimize.lattice.angle_points, 5, 1001));
    c.optimize.lattice.phase_points =
        static_cast<int>(r.integer("optimize.phase_points", c.optimize.lattice.phase_points, 1, 1001));
    c.optimize.extra_starts = static_cast<int>(r.integer("optimize.extra_starts", c.optimize.extra_starts, 0, 1000));
    c.optimize.refine.max_evaluations = static_cast<int>(
        r.integer("optimize.max_evaluations", c.optimize.refine.max_evaluations, 1, 100000000));
    c.optimize.seed = static_cast<std::uint64_t>(r.integer("seed", 0, 0, (1LL << 62)));
    c.trajectory = r.boolean("optimize.trajectory", false);

    if (r.has("output.formats")) {
        c.formats = r.words("output.formats");
        for (const auto& f : c.formats)
            if (f != "csv" && f != "jsonl" && f != "svg")
                throw ConfigError("output.formats", "'" + f + "' is not one of {csv, jsonl, svg}");
        if (c.formats.empty())
            throw ConfigError("output.formats", "must list at least one format");
    }
    c.name = r.text("output.name").value_or(default_name);
    if (c.name.empty() || c.name.find_first_of("/\\") != std::string::npos)
        throw ConfigError("output.name", "must be a plain file stem");
    r.reject_unknown();
    return c;
}

} // namespace qwalk::cli
