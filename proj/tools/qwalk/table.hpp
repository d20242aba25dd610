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
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qwalk::cli {

using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

/// Which columns a plot draws: one polyline per distinct series value.
struct PlotSpec {
    std::string x;
    std::string y;
    std::string series;
    std::string title;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::optional<PlotSpec> plot;

    int column(const std::string& name) const;
    void add(std::vector<Cell> row);
};

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);
std::string format_cell(const Cell& cell);

void write_csv(std::ostream& out, const Table& table);
/// One JSON object per row; missing and non-finite values become null.
void write_jsonl(std::ostream& out, const Table& table);
/// Minimal polyline rendering of table.plot. Requires a plot spec.
void write_svg(std::ostream& out, const Table& table);

struct CsvData {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvData read_csv(std::istream& in);
/// Exact inverse of format_double, including inf and nan.
std::optional<double> parse_double(const std::string& text);

} // namespace qwalk::cli
