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

/**
 * @file
 * Column table of optional doubles and its CSV/JSON forms.
 *
 * CSV: header row, comma separated, LF line ends, values printed with 17
 * significant digits, absent cells empty. JSON: {"meta": {...}, "columns":
 * [...], "rows": [{column: value-or-null, ...}, ...]}. Both forms round-trip
 * every double exactly.
 */

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace uur {

using Cell = std::optional<double>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// Free-form run parameters, emitted only in JSON.
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();

    /// Index of a named column; throws InvalidArgument if missing.
    [[nodiscard]] std::size_t column(std::string_view name) const;
    [[nodiscard]] const Cell &at(std::size_t row, std::string_view name) const {
        return rows[row][column(name)];
    }

    friend bool operator==(const Table &, const Table &) = default;
};

enum class TableFormat { Csv, Json };

std::string to_csv(const Table &table);
Table table_from_csv(std::string_view text);

nlohmann::ordered_json to_json(const Table &table);
Table table_from_json(const nlohmann::ordered_json &doc);

std::string serialize(const Table &table, TableFormat format);

/// Writes to `path`, or to stdout when path is "-". Throws ErrorCode::Io.
void write_table(const Table &table, TableFormat format, const std::filesystem::path &path);

} // namespace uur
