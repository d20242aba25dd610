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

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/probe.hpp"
#include "qwalk/probe_opt.hpp"

namespace qwalk::cli {

/// Invalid configuration; the message starts with the offending field path.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(const std::string& field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(field) {}
    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

/// Flat "key = value" text. Keys are dotted paths, '#' starts a comment.
struct ConfigFile {
    struct Entry {
        std::string value;
        int line = 0;
    };
    std::map<std::string, Entry> entries;
};

ConfigFile parse_config(std::istream& in);
ConfigFile load_config(const std::string& path);

/// Number with optional pi and sqrt factors: "0.5", "pi/3", "2*pi", "1/sqrt(3)".
std::optional<double> parse_number(const std::string& text);

/// Typed access that records which keys were consumed.
class ConfigReader {
  public:
    explicit ConfigReader(const ConfigFile& file) : file_(file) {}

    bool has(const std::string& key) const { return file_.entries.count(key) > 0; }
    std::optional<std::string> text(const std::string& key);
    std::string choice(const std::string& key, const std::vector<std::string>& allowed, const std::string& fallback);
    double number(const std::string& key, double fallback);
    long long integer(const std::string& key, long long fallback, long long lo, long long hi);
    bool boolean(const std::string& key, bool fallback);
    std::vector<double> numbers(const std::string& key);
    std::vector<std::string> words(const std::string& key);

    /// Throws on any key that was never read.
    void reject_unknown() const;

  private:
    const ConfigFile& file_;
    std::set<std::string> used_;
};

/// Largest walk length accepted from a configuration.
inline constexpr int kMaxConfigTime = 4096;

struct ExperimentConfig {
    CoinFamily family;
    std::vector<double> thetas;
    /// Strictly increasing.
    std::vector<int> times;
    bool optimize_probe = false;
    ProbeSpec probe;
    Objective objective = Objective::qfi;
    OptimizeOptions optimize;
    bool trajectory = false;
    /// Subset of {csv, jsonl, svg}.
    std::vector<std::string> formats{"csv"};
    std::string name = "result";
};

ExperimentConfig read_experiment(const ConfigFile& file, const std::string& default_name);

} // namespace qwalk::cli
