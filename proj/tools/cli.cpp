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

#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "dmcag/efficiency.hpp"
#include "dmcag/moduli.hpp"
#include "dmcag/pairs.hpp"
#include "dmcag/parallel.hpp"
#include "dmcag/satake.hpp"
#include "dmcag/tables.hpp"
#include "schemas.hpp"

namespace dmcag::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format;
    std::string out_path;
    bool schema = false;
    bool timestamp = false;
};

// A range flag: default, minimum and the ceiling above which
// --unsafe-no-ceiling is required.
struct Limit {
    const char* flag;
    Int fallback;
    Int minimum;
    Int ceiling;
};

struct VerifyFlags {
    std::map<std::string, std::optional<Int>> values;
    unsigned jobs = 0;
    bool unsafe = false;

    Int get(const Limit& l) const
    {
        const auto it = values.find(l.flag);
        const Int v = it != values.end() && it->second ? *it->second : l.fallback;
        if (v < l.minimum)
            throw UsageError(std::string(l.flag) + " must be >= " + std::to_string(l.minimum));
        if (v > l.ceiling && !unsafe)
            throw UsageError(std::string(l.flag) + " = " + std::to_string(v) + " exceeds the ceiling " +
                             std::to_string(l.ceiling) + "; pass --unsafe-no-ceiling to run it anyway");
        return v;
    }
};

struct VerifySpec {
    std::string description;
    std::vector<Limit> limits;
    std::function<VerificationReport(const VerifyFlags&)> run;
};

const std::map<std::string, VerifySpec>& verifiers()
{
    static const std::map<std::string, VerifySpec> table = [] {
        std::map<std::string, VerifySpec> m;
        const Limit lemma_dmax_g{"--g-max", kSuperadditivityMax, 2, 20000};
        m["lemma-dmax"] = {"superadditivity of dmax and its equality set", {lemma_dmax_g},
                           [=](const VerifyFlags& f) {
                               return moduli::verify_lemma_dmax(f.get(lemma_dmax_g), f.jobs);
                           }};
        const Limit sum{"--sum-max", 60, 2, 80};
        m["lemma-N"] = {"closed-form list of efficient multisets against Prod < 2 Sum", {sum},
                        [=](const VerifyFlags& f) { return efficiency::verify_lemma_N(f.get(sum), f.jobs); }};
        const Limit s{"--s-max", 64, 2, 1000};
        const Limit delta{"--delta-max", 64, 2, 1000};
        const Limit k{"--k-max", 64, 2, 1000};
        const Limit n{"--n-max", 64, 2, 100000};
        m["claim-F"] = {"Iflat pairs are dominated by unitary pairs with k = 2", {s, delta, k, n},
                        [=](const VerifyFlags& f) {
                            return pairs::verify_claim_F(f.get(s), f.get(delta), f.get(k), f.get(n));
                        }};
        const Limit r{"--r-max", 64, 2, 1000};
        m["remark-domination"] = {"II and III pairs are strictly dominated by unitary pairs", {r, k, n},
                                  [=](const VerifyFlags& f) {
                                      return pairs::verify_remark_domination(f.get(r), f.get(k), f.get(n));
                                  }};
        const Limit prop_g{"--g-max", 2000, 1, 1000000};
        m["prop-estimate"] = {"best indecomposable pair against dmax", {prop_g},
                              [=](const VerifyFlags& f) { return pairs::verify_prop_estimate(f.get(prop_g)); }};
        const Limit corc_g{"--g-max", moduli::kMgctExactMax, 2, 1000};
        m["cor-C"] = {"M_g^ct boundary recursion against floor(3g/2)-2", {corc_g},
                      [=](const VerifyFlags& f) { return moduli::verify_cor_c(f.get(corc_g)); }};
        const Limit rep{"--rep-max", 1024, 2, 1 << 20};
        const Limit dec_k{"--k-max", 12, 2, 1000};
        m["cor-decoupled"] = {"(k-1) hss_dim <= dmax(k rep_dim) over the catalog", {rep, dec_k},
                              [=](const VerifyFlags& f) {
                                  return moduli::verify_cor_decoupled(f.get(rep), f.get(dec_k));
                              }};
        const Limit thm_g{"--g-max", 500, 1, 5000};
        m["thm-B"] = {"dmc(A_g) recursion equals dmax and attainment descriptors", {thm_g},
                      [=](const VerifyFlags& f) { return moduli::verify_theorem_b(f.get(thm_g)); }};
        const Limit b{"--b-max", 200, 3, 10000};
        const Limit l{"--l-max", 20, 1, 1000};
        const Limit chain_g{"--g-max", 40, 2, 70};
        m["lemma-nondecoupled"] = {"numeric inequalities of the non-decoupled case analysis", {b, l, chain_g},
                                   [=](const VerifyFlags& f) {
                                       return efficiency::verify_non_decoupled(f.get(b), f.get(l), f.get(chain_g));
                                   }};
        return m;
    }();
    return table;
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream s;
    s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return s.str();
}

// Puts "schema" (and "generated_at") in front of the payload fields.
ordered_json with_header(std::string_view schema, const ordered_json& body, bool timestamp)
{
    ordered_json doc;
    doc["schema"] = schema;
    if (timestamp)
        doc["generated_at"] = utc_timestamp();
    for (const auto& [key, value] : body.items())
        if (key != "schema")
            doc[key] = value;
    return doc;
}

void emit(const Common& c, const std::string& text, std::ostream& out)
{
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.out_path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open " + c.out_path + " for writing");
    file << text;
    if (!file)
        throw UsageError("cannot write " + c.out_path);
}

Int parse_int(std::string_view text)
{
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw UsageError("not an integer: '" + std::string(text) + "'");
    return v;
}

// "g" or "a..b".
std::pair<Int, Int> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const Int g = parse_int(text);
        return {g, g};
    }
    return {parse_int(std::string_view(text).substr(0, dots)), parse_int(std::string_view(text).substr(dots + 2))};
}

std::string markdown_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows)
{
    std::ostringstream s;
    s << '|';
    for (const auto& h : header)
        s << ' ' << h << " |";
    s << "\n|";
    for (std::size_t i = 0; i < header.size(); ++i)
        s << (i == 0 ? "---|" : "---:|");
    s << '\n';
    for (const auto& row : rows) {
        s << '|';
        for (const auto& cell : row)
            s << ' ' << cell << " |";
        s << '\n';
    }
    return s.str();
}

std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows)
{
    std::ostringstream s;
    for (std::size_t i = 0; i < header.size(); ++i)
        s << (i ? "," : "") << header[i];
    s << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            s << (i ? "," : "") << row[i];
        s << '\n';
    }
    return s.str();
}

std::string maxvar_summary(const std::string& label)
{
    if (label == "(o)")
        return "g = 1: only points are compact";
    if (label == "(i)")
        return "g = 2: Hodge-generic curves and compact Shimura curves";
    if (label == "(ii)")
        return "3 <= g <= 15: Hodge-generic subvarieties of dimension g-1";
    if (label == "(iii)")
        return "even g >= 16: special subvarieties of unitary type with k = 2, n = g/2";
    if (label == "(iv)")
        return "odd g >= 19: a point of A_1 times a maximal special subvariety of A_{g-1}";
    return "g = 17: Hodge-generic, or a point of A_1 times a maximal special subvariety of A_16";
}

std::string kind_name(moduli::AttainmentKind k)
{
    switch (k) {
    case moduli::AttainmentKind::Point:
        return "Point";
    case moduli::AttainmentKind::HodgeGeneric:
        return "HodgeGeneric";
    case moduli::AttainmentKind::ShimuraCurve:
        return "ShimuraCurve";
    case moduli::AttainmentKind::SpecialFamily:
        return "SpecialFamily";
    case moduli::AttainmentKind::ProductWithPoint:
        return "ProductWithPoint";
    }
    return "?";
}

void add_common(CLI::App* sub, Common& c, const std::string& default_format)
{
    c.format = default_format;
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"markdown", "csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", c.out_path, "Write output to this file instead of standard output");
    sub->add_flag("--schema", c.schema, "Print the JSON schema of this command's JSON output and exit");
    sub->add_flag("--timestamp", c.timestamp, "Add a generation timestamp (output is no longer byte-stable)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"dmcag: maximal dimensions of compact subvarieties of A_g, tables and exhaustive checks"};
    app.name("dmcag");
    app.require_subcommand(1);

    // dmax
    Common dmax_common;
    std::string dmax_range;
    bool dmax_unsafe = false;
    auto* dmax_cmd = app.add_subcommand("dmax", "Print dmax(g) = max(g-1, floor(floor(g/2)^2/4)) for g or a..b");
    dmax_cmd->add_option("range", dmax_range, "Genus g or range a..b");
    dmax_cmd->add_flag("--unsafe-no-ceiling", dmax_unsafe, "Allow ranges of more than 10^6 genera");
    add_common(dmax_cmd, dmax_common, "markdown");

    // tables
    Common tables_common;
    bool tables_check = false;
    bool tables_conjectural = false;
    std::string tables_only;
    auto* tables_cmd = app.add_subcommand("tables", "Print the summary tables");
    tables_cmd->add_flag("--check", tables_check, "Compare every cell with the embedded golden fixture");
    tables_cmd->add_flag("--conjectural", tables_conjectural,
                         "Also print rows that assume dmc(J(M_g^ct)) <= g-1 (never checked)");
    tables_cmd->add_option("--table", tables_only, "Only this table")->check(CLI::IsMember({"ag", "mg"}));
    add_common(tables_cmd, tables_common, "markdown");

    // verify
    Common verify_common;
    std::string verify_id;
    VerifyFlags verify_flags;
    std::optional<unsigned> verify_jobs;
    auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive check and print its report");
    std::string ids;
    for (const auto& [id, spec] : verifiers())
        ids += "\n  " + id + ": " + spec.description;
    verify_cmd->add_option("id", verify_id, "Check to run:" + ids);
    for (const char* flag : {"--g-max", "--sum-max", "--s-max", "--delta-max", "--k-max", "--n-max", "--r-max",
                             "--rep-max", "--b-max", "--l-max"})
        verify_cmd->add_option(flag, verify_flags.values[flag], "Range bound (see the check's defaults)");
    verify_cmd->add_option("--jobs", verify_jobs, "Worker threads (default: available parallelism)");
    verify_cmd->add_flag("--unsafe-no-ceiling", verify_flags.unsafe, "Allow range bounds above the ceilings");
    add_common(verify_cmd, verify_common, "json");

    // explain
    Common explain_common;
    std::optional<Int> explain_g;
    bool explain_unsafe = false;
    auto* explain_cmd = app.add_subcommand("explain", "Describe dmc(A_g) and what attains it");
    explain_cmd->add_option("g", explain_g, "Genus, >= 1");
    explain_cmd->add_flag("--unsafe-no-ceiling", explain_unsafe, "Allow g above 5000");
    add_common(explain_cmd, explain_common, "markdown");

    // catalog
    Common catalog_common;
    Int catalog_rep_max = 64;
    bool catalog_unsafe = false;
    auto* catalog_cmd = app.add_subcommand("catalog", "List the classification cases with rep_dim <= --rep-max");
    catalog_cmd->add_option("--rep-max", catalog_rep_max, "Largest representation dimension")->capture_default_str();
    catalog_cmd->add_flag("--unsafe-no-ceiling", catalog_unsafe, "Allow --rep-max above 2^20");
    add_common(catalog_cmd, catalog_common, "json");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (dmax_cmd->parsed()) {
            const Common& c = dmax_common;
            if (c.schema) {
                emit(c, std::string(kDmaxSchema) + "\n", out);
                return kExitOk;
            }
            if (dmax_range.empty())
                throw UsageError("dmax: missing genus or range");
            const auto [lo, hi] = parse_range(dmax_range);
            if (lo < 1 || hi < lo)
                throw UsageError("dmax: need 1 <= a <= b, got " + dmax_range);
            if (hi - lo >= 1'000'000 && !dmax_unsafe)
                throw UsageError("dmax: range longer than 10^6; pass --unsafe-no-ceiling");
            std::vector<std::vector<std::string>> rows;
            ordered_json body{{"rows", ordered_json::array()}};
            for (Int g = lo; g <= hi; ++g) {
                rows.push_back({std::to_string(g), std::to_string(dmax(g))});
                body["rows"].push_back({{"g", g}, {"dmax", dmax(g)}});
            }
            if (c.format == "json")
                emit(c, with_header("dmcag.dmax/1", body, c.timestamp).dump(2) + "\n", out);
            else if (c.format == "csv")
                emit(c, csv_table({"g", "dmax"}, rows), out);
            else
                emit(c, markdown_table({"g", "dmax"}, rows), out);
            return kExitOk;
        }

        if (tables_cmd->parsed()) {
            const Common& c = tables_common;
            if (c.schema) {
                emit(c, std::string(kTablesSchema) + "\n", out);
                return kExitOk;
            }
            auto tables = tables::assemble_tables(tables_conjectural);
            if (!tables_only.empty())
                std::erase_if(tables, [&](const auto& t) { return t.id != tables_only; });
            std::string text;
            const auto format = tables::parse_format(c.format);
            if (format == tables::Format::json)
                text = with_header("dmcag.tables/1", tables::to_json(tables), c.timestamp).dump(2) + "\n";
            else
                text = (c.timestamp && format == tables::Format::markdown ? "generated " + utc_timestamp() + "\n\n"
                                                                          : std::string()) +
                       tables::render(tables, format);
            emit(c, text, out);
            if (tables_check) {
                // --table restricts the check to that table as well
                auto fixture = tables::golden();
                if (!tables_only.empty()) {
                    auto& list = fixture["tables"];
                    for (auto it = list.begin(); it != list.end();)
                        it = (*it)["id"] == tables_only ? it + 1 : list.erase(it);
                }
                const auto bad = tables::check_tables(tables, fixture);
                for (const auto& msg : bad)
                    err << "mismatch: " << msg << '\n';
                if (!bad.empty())
                    return kExitFail;
                err << "tables: all cells match the golden fixture\n";
            }
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            const Common& c = verify_common;
            if (c.schema) {
                emit(c, std::string(kVerifySchema) + "\n", out);
                return kExitOk;
            }
            if (verify_id.empty())
                throw UsageError("verify: missing check id; known ids:" + ids);
            const auto it = verifiers().find(verify_id);
            if (it == verifiers().end())
                throw UsageError("verify: unknown check '" + verify_id + "'; known ids:" + ids);
            for (const auto& [flag, value] : verify_flags.values) {
                if (!value)
                    continue;
                const auto& limits = it->second.limits;
                if (std::none_of(limits.begin(), limits.end(), [&](const Limit& l) { return flag == l.flag; }))
                    throw UsageError(flag + " does not apply to " + verify_id);
            }
            if (verify_jobs && *verify_jobs == 0)
                throw UsageError("--jobs must be >= 1");
            verify_flags.jobs = verify_jobs.value_or(default_jobs());
            const VerificationReport report = it->second.run(verify_flags);
            if (c.format == "csv")
                throw UsageError("verify: csv output is not available, use json or markdown");
            if (c.format == "json") {
                emit(c, with_header("dmcag.verify/1", report.to_json(), c.timestamp).dump(2) + "\n", out);
            } else {
                std::ostringstream s;
                s << "## " << report.claim << "\n\n"
                  << "- status: " << (report.passed() ? "pass" : "fail") << '\n'
                  << "- range: " << report.range.dump() << '\n'
                  << "- checked: " << report.checked << '\n'
                  << "- counterexamples: " << report.counterexamples.size() << '\n'
                  << "- equality cases: " << report.equality_cases.size() << '\n'
                  << "- witnesses: " << report.witnesses.size() << '\n';
                for (const auto& note : report.notes)
                    s << "- note: " << note << '\n';
                for (const auto& ce : report.counterexamples)
                    s << "- counterexample: " << ce.dump() << '\n';
                emit(c, s.str(), out);
            }
            return report.passed() ? kExitOk : kExitFail;
        }

        if (explain_cmd->parsed()) {
            const Common& c = explain_common;
            if (c.schema) {
                emit(c, std::string(kExplainSchema) + "\n", out);
                return kExitOk;
            }
            if (!explain_g)
                throw UsageError("explain: missing genus");
            const Int g = *explain_g;
            if (g < 1)
                throw UsageError("explain: genus must be >= 1");
            if (g > 5000 && !explain_unsafe)
                throw UsageError("explain: g above 5000; pass --unsafe-no-ceiling");
            const auto res = moduli::dmc_ag(g);
            const auto label = moduli::maxvar_case(g);
            if (c.format == "markdown") {
                std::ostringstream s;
                s << "g = " << g << "\n"
                  << "dmc(A_g) = " << res.dmc << "\n"
                  << "case " << label << ": " << maxvar_summary(label) << "\n"
                  << "attained by:\n";
                for (const auto& a : res.attained_by)
                    s << "- " << a.to_string() << ", dim " << a.dimension() << '\n';
                emit(c, s.str(), out);
            } else if (c.format == "csv") {
                std::vector<std::vector<std::string>> rows;
                for (const auto& a : res.attained_by)
                    rows.push_back({std::to_string(g), std::to_string(res.dmc), label, "\"" + a.to_string() + "\"",
                                    std::to_string(a.dimension())});
                emit(c, csv_table({"g", "dmc", "case", "descriptor", "dim"}, rows), out);
            } else {
                ordered_json body{{"g", g}, {"dmc", res.dmc}, {"case", label}, {"summary", maxvar_summary(label)}};
                body["attained_by"] = ordered_json::array();
                for (const auto& a : res.attained_by)
                    body["attained_by"].push_back(
                        {{"descriptor", a.to_string()}, {"kind", kind_name(a.kind)}, {"dim", a.dimension()}});
                emit(c, with_header("dmcag.explain/1", body, c.timestamp).dump(2) + "\n", out);
            }
            return kExitOk;
        }

        if (catalog_cmd->parsed()) {
            const Common& c = catalog_common;
            if (c.schema) {
                emit(c, std::string(kCatalogSchema) + "\n", out);
                return kExitOk;
            }
            if (catalog_rep_max < 2)
                throw UsageError("catalog: --rep-max must be >= 2");
            if (catalog_rep_max > (Int{1} << 20) && !catalog_unsafe)
                throw UsageError("catalog: --rep-max above 2^20; pass --unsafe-no-ceiling");
            const auto cases = satake::catalog(catalog_rep_max);
            if (c.format == "json") {
                ordered_json body{{"rep_max", catalog_rep_max}, {"cases", satake::catalog_json(catalog_rep_max)}};
                emit(c, with_header("dmcag.catalog/1", body, c.timestamp).dump(2) + "\n", out);
            } else {
                std::vector<std::vector<std::string>> rows;
                for (const auto& sc : cases)
                    rows.push_back({c.format == "csv" ? "\"" + satake::to_string(sc.label) + "\""
                                                      : satake::to_string(sc.label),
                                    std::to_string(sc.hss_dim), std::to_string(sc.rep_dim),
                                    satake::to_string(sc.duality), std::to_string(sc.min_compact_factors)});
                const std::vector<std::string> header{"case", "hss_dim", "rep_dim", "duality", "min_compact_factors"};
                emit(c, c.format == "csv" ? csv_table(header, rows) : markdown_table(header, rows), out);
            }
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const moduli::InconsistencyError& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return kExitFail;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace dmcag::cli
