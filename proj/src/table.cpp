// Copyright 2026 The uur Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uur/table.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "uur/error.hpp"

namespace uur {

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(std::string_view text) {
    const std::string owned(text);
    char *end = nullptr;
    errno = 0;
    const double value = std::strtod(owned.c_str(), &end);
    // strtod flags subnormal results with ERANGE too; those still round-trip.
    const bool out_of_range =
        errno == ERANGE && (std::isinf(value) || value == 0.0);
    if (end == owned.c_str() || *end != '\0' || out_of_range) {
        throw Error(ErrorCode::InvalidArgument, "malformed number in table: '" + owned + "'");
    }
    return value;
}

} // namespace

std::size_t Table::column(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) {
            return i;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "no column named '" + std::string(name) + "'");
}

std::string to_csv(const Table &table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) {
            out += ',';
        }
        out += table.columns[c];
    }
    out += '\n';
    for (const auto &row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) {
                out += ',';
            }
            if (row[c]) {
                out += format_double(*row[c]);
            }
        }
        out += '\n';
    }
    return out;
}

Table table_from_csv(std::string_view text) {
    Table table;
    std::size_t start = 0;
    bool header = true;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        const auto fields = split(line, ',');
        if (header) {
            for (auto f : fields) {
                table.columns.emplace_back(f);
            }
            header = false;
            continue;
        }
        if (fields.size() != table.columns.size()) {
            throw Error(ErrorCode::InvalidArgument, "CSV row width differs from header");
        }
        std::vector<Cell> row;
        row.reserve(fields.size());
        for (auto f : fields) {
            row.push_back(f.empty() ? Cell{} : Cell{parse_double(f)});
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

nlohmann::ordered_json to_json(const Table &table) {
    nlohmann::ordered_json doc;
    doc["meta"] = table.meta;
    doc["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto &row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c]) {
                obj[table.columns[c]] = *row[c];
            } else {
                obj[table.columns[c]] = nullptr;
            }
        }
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

Table table_from_json(const nlohmann::ordered_json &doc) {
    Table table;
    try {
        if (doc.contains("meta")) {
            table.meta = doc.at("meta");
        }
        table.columns = doc.at("columns").get<std::vector<std::string>>();
        for (const auto &obj : doc.at("rows")) {
            std::vector<Cell> row;
            row.reserve(table.columns.size());
            for (const auto &name : table.columns) {
                const auto &v = obj.at(name);
                row.push_back(v.is_null() ? Cell{} : Cell{v.get<double>()});
            }
            table.rows.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::InvalidArgument, std::string("malformed table JSON: ") + e.what());
    }
    return table;
}

std::string serialize(const Table &table, TableFormat format) {
    if (format == TableFormat::Csv) {
        return to_csv(table);
    }
    return to_json(table).dump(2) + "\n";
}

void write_table(const Table &table, TableFormat format, const std::filesystem::path &path) {
    const std::string text = serialize(table, format);
    if (path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
    }
    out << text;
    out.close();
    if (!out) {
        throw Error(ErrorCode::Io, "failed writing '" + path.string() + "'");
    }
}

} // namespace uur
