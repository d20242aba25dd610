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
#include <string>
#include <vector>

#include "qwalk/oracles.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::verify {

/// Deliberate defects used to check that the suite notices them.
enum class Fault {
    none,
    /// Negate the (dU) psi term of the derivative recurrence.
    flip_derivative_term,
};

struct CheckOutcome {
    std::string id;
    std::string group;
    double expected = 0.0;
    double observed = 0.0;
    /// Largest deviation seen, relative or absolute as flagged.
    double deviation = 0.0;
    double tolerance = 0.0;
    bool relative = false;
    int samples = 1;
    bool passed = false;
};

/// Recurrence-based evolution with optional fault, built from plain steps.
DerivativePair evolve_recurrence(const CoinOperator& coin, const ProbeSpec& probe, int t, Fault fault = Fault::none);

/// The t-term sum of U^(t-1-k) dU U^k applied to the probe, by direct expansion.
WalkState derivative_by_expansion(const CoinOperator& coin, const ProbeSpec& probe, int t);

CheckOutcome evaluate_case(const oracles::OracleCase& c, Fault fault = Fault::none);

struct SuiteOptions {
    std::uint64_t seed = 7;
    Fault fault = Fault::none;
    /// Scales the random sample counts; 1 gives the documented sizes.
    double sample_scale = 1.0;
};

std::vector<CheckOutcome> coin_properties(const SuiteOptions& options);
std::vector<CheckOutcome> walk_properties(const SuiteOptions& options);
std::vector<CheckOutcome> metrology_properties(const SuiteOptions& options);
std::vector<CheckOutcome> oracle_properties(const SuiteOptions& options);

struct Summary {
    std::vector<CheckOutcome> checks;
    int failures() const;
    bool passed() const { return failures() == 0; }
};

Summary run_verify(const SuiteOptions& options);

std::string to_json(const CheckOutcome& outcome);
std::string summary_json(const Summary& summary);

} // namespace qwalk::verify
