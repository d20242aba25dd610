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
#include "table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace qwalk::cli {

int Table::column(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    return it == columns.end() ? -1 : static_cast<int>(it - columns.begin());
}

void Table::add(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::logic_error("row width does not match the table header");
    rows.push_back(std::move(row));
}

std::string format_double(double value) {
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::optional<double> parse_double(const std::string& text) {
    if (text == "nan")
        return std::numeric_limits<double>::quiet_NaN();
    if (text == "inf")
        return std::numeric_limits<double>::infinity();
    if (text == "-inf")
        return -std::numeric_limits<double>::infinity();
    double value = 0.0;
    const char* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value);
    if (res.ec != std::errc() || res.ptr != end)
        return std::nullopt;
    return value;
}

std::string format_cell(const Cell& cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

namespace {

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos)
        return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

std::string json_cell(const Cell& cell) {
    if (const double* v = std::get_if<double>(&cell))
        return std::isfinite(*v) ? format_double(*v) : "null";
    if (std::holds_alternative<std::monostate>(cell))
        return "null";
    if (const std::string* s = std::get_if<std::string>(&cell))
        return nlohmann::json(*s).dump();
    return format_cell(cell);
}

std::string xml(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '&':
            out += "&amp;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

} // namespace

void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : "") << csv_field(table.columns[i]);
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_field(format_cell(row[i]));
        out << '\n';
    }
}

void write_jsonl(std::ostream& out, const Table& table) {
    for (const auto& row : table.rows) {
        out << '{';
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << nlohmann::json(table.columns[i]).dump() << ':' << json_cell(row[i]);
        out << "}\n";
    }
}

CsvData read_csv(std::istream& in) {
    CsvData data;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false, any = false;
    auto end_record = [&] {
        record.push_back(std::move(field));
        field.clear();
        if (data.header.empty())
            data.header = std::move(record);
        else
            data.rows.push_back(std::move(record));
        record.clear();
        any = false;
    };
    char c;
    while (in.get(c)) {
        any = true;
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field += '"';
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            record.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            end_record();
        } else if (c != '\r') {
            field += c;
        }
    }
    if (any)
        end_record();
    return data;
}

void write_svg(std::ostream& out, const Table& table) {
    if (!table.plot)
        throw std::logic_error("table has no plot specification");
    const PlotSpec& spec = *table.plot;
    const int xc = table.column(spec.x), yc = table.column(spec.y), sc = table.column(spec.series);
    if (xc < 0 || yc < 0)
        throw std::logic_error("plot columns missing from table");

    auto number = [](const Cell& c) -> std::optional<double> {
        if (const double* v = std::get_if<double>(&c))
            return std::isfinite(*v) ? std::optional<double>(*v) : std::nullopt;
        if (const std::int64_t* v = std::get_if<std::int64_t>(&c))
            return static_cast<double>(*v);
        return std::nullopt;
    };
    std::vector<std::string> order;
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& row : table.rows) {
        const auto x = number(row[xc]), y = number(row[yc]);
        if (!x || !y)
            continue;
        const std::string key = sc >= 0 ? format_cell(row[sc]) : "";
        if (!series.count(key))
            order.push_back(key);
        series[key].emplace_back(*x, *y);
        x0 = std::min(x0, *x);
        x1 = std::max(x1, *x);
        y0 = std::min(y0, *y);
        y1 = std::max(y1, *y);
    }
    if (order.empty())
        x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (x1 == x0)
        x1 = x0 + 1;
    if (y1 == y0)
        y1 = y0 + 1;

    const double width = 640, height = 400, left = 60, right = 150, top = 30, bottom = 40;
    const double pw = width - left - right, ph = height - top - bottom;
    auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return top + (1.0 - (y - y0) / (y1 - y0)) * ph; };
    static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    char buf[64];
    auto f = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };
    auto label = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.4g", v);
        return std::string(buf);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << left << "\" y=\"18\">" << xml(spec.title) << "</text>\n";
    out << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 8 << "\" text-anchor=\"middle\">" << xml(spec.x)
        << "</text>\n";
    out << "<text x=\"14\" y=\"" << top + ph / 2 << "\" transform=\"rotate(-90 14 " << top + ph / 2
        << ")\" text-anchor=\"middle\">" << xml(spec.y) << "</text>\n";
    out << "<text x=\"" << left << "\" y=\"" << top + ph + 14 << "\" text-anchor=\"middle\">" << label(x0)
        << "</text>\n";
    out << "<text x=\"" << left + pw << "\" y=\"" << top + ph + 14 << "\" text-anchor=\"middle\">" << label(x1)
        << "</text>\n";
    out << "<text x=\"" << left - 4 << "\" y=\"" << top + ph << "\" text-anchor=\"end\">" << label(y0) << "</text>\n";
    out << "<text x=\"" << left - 4 << "\" y=\"" << top + 8 << "\" text-anchor=\"end\">" << label(y1) << "</text>\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
        const char* colour = palette[i % 10];
        out << "<polyline fill=\"none\" stroke=\"" << colour << "\" points=\"";
        bool first = true;
        for (const auto& [x, y] : series[order[i]]) {
            out << (first ? "" : " ") << f(px(x)) << ',' << f(py(y));
            first = false;
        }
        out << "\"/>\n";
        const double ly = top + 12 + 14.0 * static_cast<double>(i);
        out << "<line x1=\"" << left + pw + 10 << "\" y1=\"" << ly - 4 << "\" x2=\"" << left + pw + 30 << "\" y2=\""
            << ly - 4 << "\" stroke=\"" << colour << "\"/>\n";
        out << "<text x=\"" << left + pw + 34 << "\" y=\"" << ly << "\">" << xml(spec.series.empty() || spec.series == "series" ? order[i] : spec.series + "=" + order[i]) << "</text>\n";
    }
    out << "</svg>\n";
}

} // namespace qwalk::cli
