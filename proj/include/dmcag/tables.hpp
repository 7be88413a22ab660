//
// Copyright 2026 The dmcag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef DMCAG_TABLES_HPP
#define DMCAG_TABLES_HPP

// The two summary tables: maximal compact dimensions in A_g, and the known
// bounds for M_g^ct, its Jacobian locus and M_g.

#include <string>
#include <string_view>
#include <vector>

#include "dmcag/arith.hpp"
#include "json.hpp"

namespace dmcag::tables {

struct Cell {
    Int g = 1;
    Int value = 0;
    ValueKind kind = ValueKind::exact;
    std::string provenance;  // "formula", "recursion", "bound: ..."
};

struct Row {
    std::string key;       // column name in CSV / JSON
    std::string label;     // human readable, e.g. "dmc(A_g) ="
    ValueKind kind = ValueKind::exact;  // what the label asserts
    bool conjectural = false;
    std::vector<Cell> cells;  // one per genus of the table, same order
};

struct DimensionTable {
    std::string id;
    std::string caption;
    std::vector<Int> genera;
    std::vector<Row> rows;
};

/// "34", or ">=34" / "<=34" when the cell is weaker than its row label.
std::string cell_text(const Row& row, const Cell& cell);

/// Both tables.  conjectural adds the rows that rest on the Jacobian-locus
/// conjecture dmc(J(M_g^ct)) <= g - 1; they are never part of a check.
std::vector<DimensionTable> assemble_tables(bool conjectural = false);

enum class Format { markdown, csv, json };

/// Throws std::invalid_argument on an unknown name.
Format parse_format(std::string_view name);

std::string render_markdown(const std::vector<DimensionTable>& tables);
std::string render_csv(const std::vector<DimensionTable>& tables);
nlohmann::ordered_json to_json(const std::vector<DimensionTable>& tables);
std::string render(const std::vector<DimensionTable>& tables, Format format);

/// The embedded golden fixture.
const nlohmann::ordered_json& golden();

/// One message per cell that differs from the fixture (or is missing on
/// either side); empty when everything matches.  Conjectural rows are
/// skipped.
std::vector<std::string> check_tables(const std::vector<DimensionTable>& tables,
                                      const nlohmann::ordered_json& fixture);

} // namespace dmcag::tables

#endif // DMCAG_TABLES_HPP
