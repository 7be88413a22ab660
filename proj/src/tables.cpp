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

#include "dmcag/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dmcag/golden_tables_data.hpp"
#include "dmcag/moduli.hpp"

namespace dmcag::tables {

namespace {

const std::vector<Int> kAgGenera{3, 4, 5, 6, 15, 16, 17, 18, 100};
const std::vector<Int> kMgGenera{3, 4, 5, 6, 15, 16, 17, 18, 23, 24, 100};

template <typename Fn>
Row make_row(std::string key, std::string label, ValueKind kind, const std::vector<Int>& genera, Fn fn)
{
    Row row{std::move(key), std::move(label), kind, false, {}};
    for (Int g : genera)
        row.cells.push_back(fn(g));
    return row;
}

DimensionTable ag_table()
{
    DimensionTable t;
    t.id = "ag";
    t.caption = "Maximal dimensions of compact subvarieties of A_g";
    t.genera = kAgGenera;
    const moduli::AgTable ag(*std::max_element(t.genera.begin(), t.genera.end()));

    t.rows.push_back(make_row("dmcg", "dmcg(A_g) =", ValueKind::exact, t.genera, [](Int g) {
        return Cell{g, g - 1, ValueKind::exact, "formula: g-1"};
    }));
    t.rows.push_back(make_row("dmc", "dmc(A_g) =", ValueKind::exact, t.genera, [&](Int g) {
        return Cell{g, ag.result(g).dmc, ValueKind::exact, "recursion over mdsp*"};
    }));
    t.rows.push_back(make_row("keel_sadun", "dmc(A_g) <= (Keel-Sadun)", ValueKind::upper_bound, t.genera,
                              [](Int g) {
                                  return Cell{g, keel_sadun_bound(g), ValueKind::upper_bound,
                                              "formula: g(g-1)/2-1"};
                              }));
    return t;
}

DimensionTable mg_table(bool conjectural)
{
    DimensionTable t;
    t.id = "mg";
    t.caption = "Known bounds for maximal dimensions of compact subvarieties of M_g^ct and M_g";
    t.genera = kMgGenera;

    t.rows.push_back(make_row("mgct_dmcg", "dmcg(M_g^ct) >=", ValueKind::lower_bound, t.genera, [](Int g) {
        return Cell{g, 2, ValueKind::lower_bound, "bound: constant"};
    }));
    t.rows.push_back(make_row("mgct_dmc", "dmc(M_g^ct) =", ValueKind::exact, t.genera, [](Int g) {
        const auto r = moduli::dmc_mgct(g);
        std::string prov = r.open ? "bound: floor(3g/2)-2, open" : "recursion";
        if (r.upper)
            prov += "; upper " + std::to_string(r.upper->value);
        return Cell{g, r.value.value, r.value.kind, prov};
    }));
    t.rows.push_back(make_row("jac_upper", "dmc(J(M_g^ct)) <=", ValueKind::upper_bound, t.genera, [](Int g) {
        const auto b = moduli::jacobian_bounds(g);
        return Cell{g, b.upper, ValueKind::upper_bound,
                    "bound: min(dmax=" + std::to_string(b.upper_from_ag) +
                        ", M_g^ct=" + std::to_string(b.upper_from_mgct) + ")"};
    }));
    t.rows.push_back(make_row("jac_lower", "dmc(J(M_g^ct)) >=", ValueKind::lower_bound, t.genera, [](Int g) {
        return Cell{g, moduli::jacobian_bounds(g).lower, ValueKind::lower_bound, "bound: floor(2g/3)"};
    }));
    t.rows.push_back(make_row("mg_dmcg", "dmcg(M_g) >=", ValueKind::lower_bound, t.genera, [](Int g) {
        return Cell{g, 1, ValueKind::lower_bound, "bound: constant"};
    }));
    t.rows.push_back(make_row("mg_covers", "dmc(M_g) >= (covers)", ValueKind::lower_bound, t.genera,
                              [](Int g) {
                                  return Cell{g, moduli::mg_bounds(g).lower, ValueKind::lower_bound,
                                              "bound: max(1, floor(log2 g)-1)"};
                              }));
    t.rows.push_back(make_row("mg_diaz", "dmc(M_g) <= (Diaz)", ValueKind::upper_bound, t.genera, [](Int g) {
        return Cell{g, moduli::mg_bounds(g).upper, ValueKind::upper_bound, "bound: g-2"};
    }));

    if (conjectural) {
        Row row = make_row("jac_upper_conj", "dmc(J(M_g^ct)) <= (conjectural)", ValueKind::upper_bound,
                           t.genera, [](Int g) {
                               return Cell{g, g - 1, ValueKind::upper_bound, "conjecture: g-1"};
                           });
        row.conjectural = true;
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string relation_prefix(ValueKind kind)
{
    switch (kind) {
    case ValueKind::lower_bound:
        return ">=";
    case ValueKind::upper_bound:
        return "<=";
    case ValueKind::exact:
        break;
    }
    return "";
}

} // namespace

std::string cell_text(const Row& row, const Cell& cell)
{
    const std::string v = std::to_string(cell.value);
    return cell.kind == row.kind ? v : relation_prefix(cell.kind) + v;
}

std::vector<DimensionTable> assemble_tables(bool conjectural)
{
    return {ag_table(), mg_table(conjectural)};
}

Format parse_format(std::string_view name)
{
    if (name == "markdown")
        return Format::markdown;
    if (name == "csv")
        return Format::csv;
    if (name == "json")
        return Format::json;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string render_markdown(const std::vector<DimensionTable>& tables)
{
    std::ostringstream out;
    bool first = true;
    for (const auto& t : tables) {
        if (!first)
            out << '\n';
        first = false;
        out << "## " << t.caption << "\n\n| g |";
        for (Int g : t.genera)
            out << ' ' << g << " |";
        out << "\n|---|";
        for (std::size_t i = 0; i < t.genera.size(); ++i)
            out << "---:|";
        out << '\n';
        for (const auto& row : t.rows) {
            out << "| " << row.label << " |";
            for (const auto& c : row.cells)
                out << ' ' << cell_text(row, c) << " |";
            out << '\n';
        }
    }
    return out.str();
}

std::string render_csv(const std::vector<DimensionTable>& tables)
{
    std::ostringstream out;
    bool first = true;
    for (const auto& t : tables) {
        if (!first)
            out << '\n';
        first = false;
        out << 'g';
        for (const auto& row : t.rows)
            out << ',' << row.key;
        out << '\n';
        for (std::size_t i = 0; i < t.genera.size(); ++i) {
            out << t.genera[i];
            for (const auto& row : t.rows)
                out << ',' << cell_text(row, row.cells[i]);
            out << '\n';
        }
    }
    return out.str();
}

nlohmann::ordered_json to_json(const std::vector<DimensionTable>& tables)
{
    nlohmann::ordered_json doc;
    doc["schema"] = "dmcag.tables/1";
    doc["tables"] = nlohmann::ordered_json::array();
    for (const auto& t : tables) {
        nlohmann::ordered_json jt;
        jt["id"] = t.id;
        jt["caption"] = t.caption;
        jt["genera"] = t.genera;
        jt["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : t.rows)
            jt["rows"].push_back({{"key", row.key},
                                  {"label", row.label},
                                  {"kind", to_string(row.kind)},
                                  {"conjectural", row.conjectural}});
        jt["records"] = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < t.genera.size(); ++i) {
            nlohmann::ordered_json rec;
            rec["g"] = t.genera[i];
            for (const auto& row : t.rows) {
                const Cell& c = row.cells[i];
                rec[row.key] = {{"value", c.value},
                                {"kind", to_string(c.kind)},
                                {"text", cell_text(row, c)},
                                {"provenance", c.provenance}};
            }
            jt["records"].push_back(std::move(rec));
        }
        doc["tables"].push_back(std::move(jt));
    }
    return doc;
}

std::string render(const std::vector<DimensionTable>& tables, Format format)
{
    switch (format) {
    case Format::markdown:
        return render_markdown(tables);
    case Format::csv:
        return render_csv(tables);
    case Format::json:
        return to_json(tables).dump(2) + "\n";
    }
    return {};
}

const nlohmann::ordered_json& golden()
{
    static const nlohmann::ordered_json doc = nlohmann::ordered_json::parse(kGoldenTablesJson);
    return doc;
}

std::vector<std::string> check_tables(const std::vector<DimensionTable>& tables,
                                      const nlohmann::ordered_json& fixture)
{
    std::vector<std::string> bad;
    const auto& expected = fixture.at("tables");
    for (const auto& jt : expected) {
        const std::string id = jt.at("id").get<std::string>();
        auto t = std::find_if(tables.begin(), tables.end(), [&](const auto& x) { return x.id == id; });
        if (t == tables.end()) {
            bad.push_back("table " + id + ": missing");
            continue;
        }
        const auto genera = jt.at("genera").get<std::vector<Int>>();
        if (genera != t->genera) {
            bad.push_back("table " + id + ": genus header differs");
            continue;
        }
        std::vector<std::string> order;
        for (const auto& row : t->rows)
            if (!row.conjectural)
                order.push_back(row.key);
        std::vector<std::string> expected_order;
        for (const auto& [key, cells] : jt.at("rows").items())
            expected_order.push_back(key);
        if (order != expected_order)
            bad.push_back("table " + id + ": row order differs from fixture");

        for (const auto& [key, cells] : jt.at("rows").items()) {
            auto row = std::find_if(t->rows.begin(), t->rows.end(), [&](const auto& r) { return r.key == key; });
            if (row == t->rows.end()) {
                bad.push_back("table " + id + ", row " + key + ": missing");
                continue;
            }
            for (std::size_t i = 0; i < genera.size(); ++i) {
                const std::string want = cells.at(i).get<std::string>();
                const std::string got = cell_text(*row, row->cells[i]);
                if (want != got)
                    bad.push_back("table " + id + ", row " + key + ", g=" + std::to_string(genera[i]) +
                                  ": expected " + want + ", got " + got);
            }
        }
        for (const auto& row : t->rows)
            if (!row.conjectural && !jt.at("rows").contains(row.key))
                bad.push_back("table " + id + ", row " + row.key + ": not in fixture");
    }
    for (const auto& t : tables)
        if (std::none_of(expected.begin(), expected.end(), [&](const auto& jt) { return jt.at("id") == t.id; }))
            bad.push_back("table " + t.id + ": not in fixture");
    return bad;
}

} // namespace dmcag::tables
