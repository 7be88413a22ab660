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

#include "dmcag/moduli.hpp"

#include <algorithm>

#include "dmcag/parallel.hpp"
#include "dmcag/satake.hpp"

namespace dmcag::moduli {

namespace {

Int mgct_closed_form(Int g)
{
    return (3 * g) / 2 - 2;
}

Attainment special_from_family(const pairs::Family& f, Int g)
{
    if (f.kind == pairs::FamilyKind::A1)
        return Attainment{AttainmentKind::ShimuraCurve, g, 0, 0, {}};
    return Attainment{AttainmentKind::SpecialFamily, g, f.first, f.second, {}};
}

} // namespace

Int Attainment::dimension() const
{
    switch (kind) {
    case AttainmentKind::Point:
        return 0;
    case AttainmentKind::HodgeGeneric:
        return g - 1;
    case AttainmentKind::ShimuraCurve:
        return 1;
    case AttainmentKind::SpecialFamily:
        return pairs::unitary_pair(k, n).d;
    case AttainmentKind::ProductWithPoint:
        return inner.size() == 1 ? inner.front().dimension() : -1;
    }
    return -1;
}

std::string Attainment::to_string() const
{
    switch (kind) {
    case AttainmentKind::Point:
        return "Point";
    case AttainmentKind::HodgeGeneric:
        return "HodgeGeneric";
    case AttainmentKind::ShimuraCurve:
        return "ShimuraCurve";
    case AttainmentKind::SpecialFamily:
        return "SpecialFamily(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
    case AttainmentKind::ProductWithPoint:
        return "ProductWithPoint(" + (inner.empty() ? std::string("?") : inner.front().to_string()) + ")";
    }
    return "?";
}

AgTable::AgTable(Int g_max) : mdsp_(g_max)
{
    dmc_.assign(static_cast<std::size_t>(g_max) + 1, 0);
    for (Int g = 1; g <= g_max; ++g) {
        Int best = mdsp_.mdsp_star(g);
        for (Int gp = 0; gp < g; ++gp)
            best = std::max(best, g - gp - 1 + mdsp_.mdsp_star(gp));
        if (best != dmax(g))
            throw InconsistencyError("dmc(A_" + std::to_string(g) + ") recursion gives " +
                                     std::to_string(best) + " but dmax gives " + std::to_string(dmax(g)));
        dmc_[static_cast<std::size_t>(g)] = best;
    }
}

AgResult AgTable::result(Int g) const
{
    if (g < 0 || g > g_max())
        throw std::out_of_range("AgTable: genus outside table");
    AgResult res;
    res.g = g;
    res.dmc = dmc_[static_cast<std::size_t>(g)];
    // A_0 is a point and A_1 is a curve, so dmc is 0 and only points attain it
    if (g <= 1) {
        res.attained_by.push_back(Attainment{AttainmentKind::Point, g, 0, 0, {}});
        return res;
    }

    if (g - 1 == res.dmc)
        res.attained_by.push_back(Attainment{AttainmentKind::HodgeGeneric, g, 0, 0, {}});
    if (res.dmc > 0 && mdsp_.best_indecomposable(g) == res.dmc)
        for (const auto& f : pairs::best_indecomposable_families(g))
            res.attained_by.push_back(special_from_family(f, g));
    if (g >= 2 && res.dmc > 0 && mdsp_.best_indecomposable(g - 1) == res.dmc)
        for (const auto& f : pairs::best_indecomposable_families(g - 1)) {
            Attainment prod{AttainmentKind::ProductWithPoint, g, 0, 0, {}};
            prod.inner.push_back(special_from_family(f, g - 1));
            res.attained_by.push_back(prod);
        }

    // Any other way of reaching dmc would be a product with two positive
    // dimensional factors, which strict superadditivity of dmax rules out.
    for (Int a = 2; 2 * a <= g; ++a)
        if (mdsp_.mdsp_star(a) + mdsp_.mdsp_star(g - a) == res.dmc && mdsp_.mdsp_star(a) > 0 &&
            mdsp_.mdsp_star(g - a) > 0)
            throw InconsistencyError("unexpected product attainment at g=" + std::to_string(g));
    if (res.attained_by.empty())
        throw InconsistencyError("no attainment descriptor for g=" + std::to_string(g));
    for (const auto& a : res.attained_by)
        if (a.dimension() != res.dmc)
            throw InconsistencyError("descriptor " + a.to_string() + " does not evaluate to dmc");
    return res;
}

AgResult dmc_ag(Int g)
{
    if (g < 0)
        throw std::domain_error("dmc_ag: genus must be >= 0");
    return AgTable(g).result(g);
}

std::string maxvar_case(Int g)
{
    if (g < 1)
        throw std::domain_error("maxvar_case: genus must be >= 1");
    if (g == 1)
        return "(o)";
    if (g == 2)
        return "(i)";
    if (g <= 15)
        return "(ii)";
    if (g % 2 == 0)
        return "(iii)";
    if (g == 17)
        return "(v)";
    return "(iv)";
}

std::vector<MgctRecursionRow> mgct_recursion(Int g_max)
{
    std::vector<MgctRecursionRow> rows;
    std::vector<Int> value(static_cast<std::size_t>(std::max<Int>(g_max, 3)) + 1, 0);
    auto pointed = [&](Int k) { return k == 1 ? Int{0} : 1 + value[static_cast<std::size_t>(k)]; };
    for (Int g = 2; g <= g_max; ++g) {
        MgctRecursionRow row;
        row.g = g;
        row.closed_form = mgct_closed_form(g);
        row.interior = dmax(g);
        if (g == 2) {
            row.value = 1;
        } else if (g == 3) {
            row.value = 2;
        } else {
            row.interior_ok = row.interior < row.closed_form;
            Int boundary = 0;
            for (Int a = 1; 2 * a <= g; ++a)
                boundary = std::max(boundary, pointed(a) + pointed(g - a));
            row.value = std::max(row.interior, boundary);
        }
        value[static_cast<std::size_t>(g)] = row.value;
        rows.push_back(row);
    }
    return rows;
}

MgctResult dmc_mgct(Int g)
{
    if (g < 2)
        throw std::domain_error("dmc_mgct: genus must be >= 2");
    MgctResult res;
    res.g = g;
    if (g <= kMgctExactMax) {
        const auto rows = mgct_recursion(g);
        const auto& row = rows.back();
        if (!row.interior_ok || row.value != row.closed_form)
            throw InconsistencyError("M_" + std::to_string(g) + "^ct recursion gives " +
                                     std::to_string(row.value) + ", closed form " +
                                     std::to_string(row.closed_form));
        res.value = GenusValue{g, row.value, ValueKind::exact};
        res.provenance.push_back("boundary recursion");
        return res;
    }
    res.open = true;
    res.value = GenusValue{g, mgct_closed_form(g), ValueKind::lower_bound};
    Int upper = 2 * g - 4;
    res.provenance.push_back("lower: boundary construction floor(3g/2)-2");
    res.provenance.push_back("upper: 2g-4");
    if (g <= 28) {
        upper = std::min(upper, dmax(g));
        res.provenance.push_back("upper: dmax(g) for g <= 28");
    }
    res.upper = GenusValue{g, upper, ValueKind::upper_bound};
    return res;
}

JacobianBounds jacobian_bounds(Int g)
{
    if (g < 2)
        throw std::domain_error("jacobian_bounds: genus must be >= 2");
    JacobianBounds b;
    b.lower = (2 * g) / 3;
    b.upper_from_ag = dmax(g);
    b.upper_from_mgct = g <= kMgctExactMax ? mgct_closed_form(g) : 2 * g - 4;
    b.upper = std::min(b.upper_from_ag, b.upper_from_mgct);
    return b;
}

Bounds mg_bounds(Int g)
{
    if (g < 2)
        throw std::domain_error("mg_bounds: genus must be >= 2");
    // a compact d-fold exists once g >= 2^(d+1)
    const Int lower = g == 2 ? 0 : std::max<Int>(1, floor_log2(g) - 1);
    return Bounds{lower, g - 2};
}

AgIndBounds agind_bounds(Int g)
{
    if (g < 2)
        throw std::domain_error("agind_bounds: genus must be >= 2");
    AgIndBounds b{g - 2, g - 1, std::nullopt};
    if (g <= 4)
        b.exact = g - 2;
    return b;
}

VerificationReport verify_theorem_b(Int g_max)
{
    VerificationReport rep;
    rep.claim = "thm-B";
    rep.range = {{"g_min", 1}, {"g_max", g_max}};
    try {
        const AgTable table(g_max);
        for (Int g = 1; g <= g_max; ++g) {
            ++rep.checked;
            const AgResult r = table.result(g);
            const std::size_t expected = (g == 2 || g == 17) ? 2 : 1;
            if (r.attained_by.size() != expected)
                rep.counterexamples.push_back(
                    {{"g", g}, {"reason", "attainment count " + std::to_string(r.attained_by.size())}});
            if (g == 2 || g == 17 || g == 16 || g == 19) {
                nlohmann::ordered_json w = {{"g", g}, {"dmc", r.dmc}, {"case", maxvar_case(g)}};
                nlohmann::ordered_json by = nlohmann::ordered_json::array();
                for (const auto& a : r.attained_by)
                    by.push_back(a.to_string());
                w["attained_by"] = by;
                rep.witnesses.push_back(w);
            }
        }
    } catch (const InconsistencyError& e) {
        rep.counterexamples.push_back({{"reason", e.what()}});
    }
    return rep;
}

VerificationReport verify_cor_c(Int g_max)
{
    VerificationReport rep;
    rep.claim = "cor-C";
    rep.range = {{"g_min", 2}, {"g_max", g_max}};
    for (const auto& row : mgct_recursion(g_max)) {
        ++rep.checked;
        nlohmann::ordered_json entry = {{"g", row.g},
                                        {"recursion", row.value},
                                        {"closed_form", row.closed_form},
                                        {"dmax", row.interior}};
        if (!row.interior_ok) {
            entry["reason"] = "interior hypothesis dmax(g) < floor(3g/2)-2 fails";
            rep.counterexamples.push_back(entry);
        } else if (row.value != row.closed_form) {
            entry["reason"] = "recursion differs from closed form";
            rep.counterexamples.push_back(entry);
        } else {
            rep.witnesses.push_back(entry);
        }
    }
    return rep;
}

VerificationReport verify_cor_decoupled(Int rep_max, Int k_max)
{
    VerificationReport rep;
    rep.claim = "cor-decoupled";
    rep.range = {{"rep_max", rep_max}, {"k_min", 2}, {"k_max", k_max}};
    for (const auto& sc : satake::catalog(rep_max)) {
        for (Int k = 2; k <= k_max; ++k) {
            ++rep.checked;
            const Int lhs = checked_mul(k - 1, sc.hss_dim);
            const Int rhs = dmax(checked_mul(k, sc.rep_dim));
            if (lhs < rhs)
                continue;
            nlohmann::ordered_json entry = {{"case", satake::to_string(sc.label)}, {"k", k},
                                            {"lhs", lhs}, {"dmax", rhs}};
            if (lhs > rhs) {
                entry["reason"] = "exceeds dmax(k dim U)";
                rep.counterexamples.push_back(entry);
            } else if (lhs == rhs) {
                if (sc.label.kind != satake::CaseKind::I || k != 2) {
                    entry["reason"] = "equality outside type I with k = 2";
                    rep.counterexamples.push_back(entry);
                } else {
                    rep.equality_cases.push_back(entry);
                }
            }
        }
    }
    return rep;
}

VerificationReport verify_lemma_dmax(Int g_max, unsigned jobs)
{
    VerificationReport rep;
    rep.claim = "lemma-dmax";
    rep.range = {{"g1_min", 1}, {"sum_max", g_max}};

    struct Partial {
        Int checked = 0;
        std::vector<nlohmann::ordered_json> bad;
        std::vector<nlohmann::ordered_json> equal;
    };
    const Int g1_max = g_max / 2;
    const auto count = static_cast<std::size_t>(std::max<Int>(g1_max, 0));
    auto parts = run_indexed<Partial>(count, jobs, [&](std::size_t i) {
        Partial p;
        const Int g1 = static_cast<Int>(i) + 1;
        const Int d1 = dmax(g1);
        for (Int g2 = g1; g1 + g2 <= g_max; ++g2) {
            ++p.checked;
            const Int lhs = dmax(g1 + g2);
            const Int rhs = d1 + dmax(g2);
            const bool expect_equal = g1 == 1 && g2 >= 16 && g2 % 2 == 0;
            if (lhs < rhs || (lhs == rhs) != expect_equal)
                p.bad.push_back({{"g1", g1}, {"g2", g2}, {"dmax_sum", lhs}, {"sum_dmax", rhs}});
            else if (lhs == rhs)
                p.equal.push_back(nlohmann::ordered_json::array({g1, g2}));
        }
        return p;
    });
    for (auto& p : parts) {
        rep.checked += p.checked;
        for (auto& b : p.bad)
            rep.counterexamples.push_back(std::move(b));
        for (auto& e : p.equal)
            rep.equality_cases.push_back(std::move(e));
    }
    rep.notes.push_back("equality exactly at g1 = 1 with g2 >= 16 even");
    return rep;
}

} // namespace dmcag::moduli
