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

#include "dmcag/pairs.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace dmcag::pairs {

namespace {

nlohmann::ordered_json pair_json(const Pair& p)
{
    return nlohmann::ordered_json::array({p.d, p.g});
}

void require(bool ok, const Family& f, const char* constraint)
{
    if (!ok)
        throw std::domain_error(name(f) + ": parameters violate " + constraint);
}

struct SearchHit {
    Pair pair;
    Int k = 0;
    Int n = 0;
};

// Best I-formula pair (k <= k_max, 2 <= n <= n_max) dominating target, if
// any.  For fixed k the largest admissible n gives the largest d.
std::optional<SearchHit> search_unitary_witness(const Pair& target, Int k_max, Int n_max)
{
    std::optional<SearchHit> best;
    for (Int k = 2; k <= k_max; ++k) {
        const Int n = std::min(n_max, target.g / k);
        if (n < 2)
            continue;
        const Pair cand = unitary_pair(k, n);
        if (!dominates(cand, target))
            continue;
        if (!best || cand.d > best->pair.d || (cand.d == best->pair.d && cand.g < best->pair.g))
            best = SearchHit{cand, k, n};
    }
    return best;
}

} // namespace

std::string name(const Family& f)
{
    const std::string a = std::to_string(f.first);
    const std::string b = std::to_string(f.second);
    switch (f.kind) {
    case FamilyKind::A1: return "A1";
    case FamilyKind::I: return "I_k=" + a + "_n=" + b;
    case FamilyKind::II: return "II_k=" + a + "_r=" + b;
    case FamilyKind::III: return "III_k=" + a + "_r=" + b;
    case FamilyKind::IflatR1: return "Iflat_r1_s=" + a + "_delta=" + b;
    case FamilyKind::IflatR2: return "Iflat_r2_s=" + a + "_delta=" + b;
    }
    return "?";
}

bool contributes_to_maximum(FamilyKind kind)
{
    return kind == FamilyKind::A1 || kind == FamilyKind::I;
}

Pair unitary_pair(Int k, Int n)
{
    if (k < 1 || n < 2)
        throw std::domain_error("unitary_pair: need k >= 1, n >= 2");
    return Pair{checked_mul(k - 1, half_product(n)), checked_mul(k, n)};
}

Pair family_pair(const Family& f)
{
    const Int a = f.first;
    const Int b = f.second;
    switch (f.kind) {
    case FamilyKind::A1:
        return Pair{1, 2};
    case FamilyKind::I:
        require(a >= 2 && b >= 3, f, "k >= 2, n >= 3");
        return unitary_pair(a, b);
    case FamilyKind::II:
        require(a >= 2 && b >= 4, f, "k >= 2, r >= 4");
        return Pair{checked_mul(a - 1, checked_mul(b, b - 1) / 2), checked_mul(2, checked_mul(b, a))};
    case FamilyKind::III:
        require(a >= 2 && b >= 2, f, "k >= 2, r >= 2");
        return Pair{checked_mul(a - 1, checked_mul(b, b + 1) / 2), checked_mul(2, checked_mul(b, a))};
    case FamilyKind::IflatR1:
        require(a >= 1 && b >= 2, f, "s >= 1, delta >= 2");
        return Pair{checked_mul(a, half_product(b)), checked_mul(a, checked_mul(b, b))};
    case FamilyKind::IflatR2:
        require(a >= 1 && b >= 2, f, "s >= 1, delta >= 2");
        return Pair{checked_mul(a, half_product(2 * b)), checked_mul(2, checked_mul(a, checked_mul(b, b)))};
    }
    return Pair{};
}

std::vector<TaggedPair> enumerate_family_pairs(Int g_max, FamilySelection selection)
{
    std::vector<TaggedPair> out;
    auto add = [&](const Family& f) { out.push_back(TaggedPair{family_pair(f), f}); };

    if (g_max >= 2)
        add(Family::a1());
    // Every family genus is strictly increasing in each parameter, so each
    // loop stops at the first genus above g_max.
    for (Int k = 2; k * 3 <= g_max; ++k)
        for (Int n = 3; k * n <= g_max; ++n)
            add(Family::unitary(k, n));
    if (selection == FamilySelection::all) {
        for (Int k = 2; 2 * 4 * k <= g_max; ++k)
            for (Int r = 4; 2 * r * k <= g_max; ++r)
                add(Family::so_star(k, r));
        for (Int k = 2; 2 * 2 * k <= g_max; ++k)
            for (Int r = 2; 2 * r * k <= g_max; ++r)
                add(Family::sp(k, r));
        for (Int s = 1; s * 4 <= g_max; ++s)
            for (Int delta = 2; s * delta * delta <= g_max; ++delta)
                add(Family::flat_r1(s, delta));
        for (Int s = 1; 2 * s * 4 <= g_max; ++s)
            for (Int delta = 2; 2 * s * delta * delta <= g_max; ++delta)
                add(Family::flat_r2(s, delta));
    }
    std::sort(out.begin(), out.end(), [](const TaggedPair& x, const TaggedPair& y) {
        if (x.pair.g != y.pair.g)
            return x.pair.g < y.pair.g;
        if (x.pair.d != y.pair.d)
            return x.pair.d < y.pair.d;
        return x.family < y.family;
    });
    return out;
}

std::vector<FrontierEntry> frontier(const std::vector<TaggedPair>& pairs)
{
    std::vector<FrontierEntry> merged;
    {
        std::vector<TaggedPair> sorted = pairs;
        std::sort(sorted.begin(), sorted.end(), [](const TaggedPair& x, const TaggedPair& y) {
            if (x.pair != y.pair)
                return x.pair < y.pair;
            return x.family < y.family;
        });
        for (const auto& tp : sorted) {
            if (merged.empty() || merged.back().pair != tp.pair)
                merged.push_back(FrontierEntry{tp.pair, {}});
            merged.back().families.push_back(tp.family);
        }
    }
    // Sweep by increasing genus; a pair survives iff its d exceeds the best d
    // seen at any smaller-or-equal genus among different pairs.
    std::sort(merged.begin(), merged.end(), [](const FrontierEntry& x, const FrontierEntry& y) {
        if (x.pair.g != y.pair.g)
            return x.pair.g < y.pair.g;
        return x.pair.d > y.pair.d;
    });
    std::vector<FrontierEntry> out;
    std::optional<Int> best_d;
    for (auto& e : merged) {
        if (!best_d || e.pair.d > *best_d) {
            best_d = e.pair.d;
            out.push_back(std::move(e));
        }
    }
    return out;
}

Int best_indecomposable(Int g)
{
    if (g < 1)
        throw std::domain_error("best_indecomposable: genus must be >= 1");
    Int best = (g == 2) ? 1 : 0;
    for (Int k = 2; k * 3 <= g; ++k)
        if (g % k == 0)
            best = std::max(best, unitary_pair(k, g / k).d);
    return best;
}

std::vector<Family> best_indecomposable_families(Int g)
{
    const Int best = best_indecomposable(g);
    std::vector<Family> out;
    if (best == 0)
        return out;
    if (g == 2)
        out.push_back(Family::a1());
    for (Int k = 2; k * 3 <= g; ++k)
        if (g % k == 0 && unitary_pair(k, g / k).d == best)
            out.push_back(Family::unitary(k, g / k));
    return out;
}

MdspTable::MdspTable(Int g_max)
{
    if (g_max < 0)
        throw std::domain_error("MdspTable: g_max must be >= 0");
    const auto size = static_cast<std::size_t>(g_max) + 1;
    best_.assign(size, 0);
    for (const auto& tp : enumerate_family_pairs(g_max, FamilySelection::maximal_only)) {
        auto& slot = best_[static_cast<std::size_t>(tp.pair.g)];
        slot = std::max(slot, tp.pair.d);
    }
    closure_.assign(size, 0);
    for (std::size_t g = 1; g < size; ++g) {
        Int m = best_[g];
        for (std::size_t a = 1; 2 * a <= g; ++a)
            m = std::max(m, closure_[a] + closure_[g - a]);
        closure_[g] = m;
    }
}

void MdspTable::check(Int g) const
{
    if (g < 0 || g > g_max())
        throw std::out_of_range("MdspTable: genus " + std::to_string(g) + " outside [0, " +
                                std::to_string(g_max()) + "]");
}

Int MdspTable::best_indecomposable(Int g) const
{
    check(g);
    return best_[static_cast<std::size_t>(g)];
}

Int MdspTable::mdsp_star(Int g) const
{
    check(g);
    return closure_[static_cast<std::size_t>(g)];
}

Int mdsp_star(Int g)
{
    if (g < 0)
        throw std::domain_error("mdsp_star: genus must be >= 0");
    return MdspTable(g).mdsp_star(g);
}

VerificationReport verify_claim_F(Int s_max, Int delta_max, Int k_max, Int n_max)
{
    VerificationReport rep;
    rep.claim = "claim-F";
    rep.range = {{"s_max", s_max}, {"delta_max", delta_max}, {"k_max", k_max}, {"n_max", n_max}};

    const std::set<Pair> expected_equal = {Pair{1, 4}, Pair{4, 8}};
    Int oracle_confirmed = 0;
    for (int r = 1; r <= 2; ++r) {
        for (Int s = 1; s <= s_max; ++s) {
            for (Int delta = 2; delta <= delta_max; ++delta) {
                const Family f = (r == 1) ? Family::flat_r1(s, delta) : Family::flat_r2(s, delta);
                const Pair target = family_pair(f);
                const Int sdd = checked_mul(s, checked_mul(delta, delta));
                const Int n = (r == 1) ? sdd / 2 : sdd;
                const Pair witness = unitary_pair(2, n);
                ++rep.checked;

                nlohmann::ordered_json entry;
                entry["pair"] = pair_json(target);
                entry["family"] = name(f);
                entry["witness"] = pair_json(witness);
                entry["witness_family"] = "I_k=2_n=" + std::to_string(n);

                const bool dom = dominates(witness, target);
                const bool strict = strictly_dominates(witness, target);
                const bool should_be_equal = expected_equal.count(target) > 0;
                if (!dom || (strict == should_be_equal)) {
                    entry["reason"] = !dom ? "witness does not dominate"
                                           : (strict ? "strict where equality expected"
                                                     : "equality where strict domination expected");
                    rep.counterexamples.push_back(entry);
                    continue;
                }
                if (!strict) {
                    entry["witness_equal"] = witness == target;
                    rep.equality_cases.push_back(entry);
                }

                // Independent route: only conclusive when the box contains
                // the witness.
                if (n <= n_max) {
                    const auto hit = search_unitary_witness(target, k_max, n_max);
                    const bool oracle_strict = hit && hit->pair.d > target.d;
                    if (!hit || oracle_strict != strict) {
                        entry["reason"] = "exhaustive witness search disagrees";
                        rep.counterexamples.push_back(entry);
                        continue;
                    }
                    ++oracle_confirmed;
                }
                rep.witnesses.push_back(entry);
            }
        }
    }
    rep.notes.push_back("exhaustive witness search confirmed " + std::to_string(oracle_confirmed) +
                        " of " + std::to_string(rep.checked) + " pairs");
    return rep;
}

VerificationReport verify_remark_domination(Int r_max, Int k_max, Int n_max)
{
    VerificationReport rep;
    rep.claim = "remark-domination";
    rep.range = {{"r_max", r_max}, {"k_max", k_max}, {"n_max", n_max}};

    auto check_one = [&](const Family& f, Int remark_n) {
        const Pair target = family_pair(f);
        const Int k = f.first;
        const Pair witness = unitary_pair(k, remark_n);
        ++rep.checked;
        nlohmann::ordered_json entry;
        entry["pair"] = pair_json(target);
        entry["family"] = name(f);
        entry["remark_witness"] = pair_json(witness);
        entry["remark_witness_family"] = name(Family::unitary(k, remark_n));

        const bool remark_ok = strictly_dominates(witness, target);
        const auto hit = search_unitary_witness(target, k_max, n_max);
        const bool oracle_ok = hit && hit->pair.d > target.d;
        if (remark_ok) {
            // A box containing the remark witness must find it or better.
            if (remark_n <= n_max && k <= k_max && !oracle_ok) {
                entry["reason"] = "exhaustive witness search disagrees";
                rep.counterexamples.push_back(entry);
                return;
            }
            rep.witnesses.push_back(entry);
            return;
        }
        if (oracle_ok) {
            entry["witness"] = pair_json(hit->pair);
            entry["witness_family"] = name(Family::unitary(hit->k, hit->n));
            rep.witnesses.push_back(entry);
            rep.notes.push_back(name(f) + ": remark witness " + to_string(witness) +
                                " does not strictly dominate; " +
                                name(Family::unitary(hit->k, hit->n)) + " " + to_string(hit->pair) +
                                " does");
            return;
        }
        entry["reason"] = "no strictly dominating I pair found";
        rep.counterexamples.push_back(entry);
    };

    for (Int k = 2; k <= k_max; ++k) {
        for (Int r = 4; r <= r_max; ++r)
            check_one(Family::so_star(k, r), 2 * r - 1);
        for (Int r = 2; r <= r_max; ++r)
            check_one(Family::sp(k, r), r == 3 ? 6 : 2 * r - 1);
    }
    return rep;
}

VerificationReport verify_prop_estimate(Int g_max)
{
    VerificationReport rep;
    rep.claim = "prop-estimate";
    rep.range = {{"g_min", 1}, {"g_max", g_max}};

    const MdspTable table(g_max);
    for (Int g = 1; g <= g_max; ++g) {
        ++rep.checked;
        const Int best = table.best_indecomposable(g);
        const Int bound = dmax(g);
        const bool expect_equal = (g == 2) || (g % 2 == 0 && g >= 16);
        // best == 0 means no family pair has genus g (g = 1, primes, ...);
        // dmax(1) = 0 is then not an attained equality.
        const bool attained = best > 0 && best == bound;
        if (best > bound || attained != expect_equal) {
            rep.counterexamples.push_back(
                {{"g", g}, {"best_indecomposable", best}, {"dmax", bound},
                 {"reason", best > bound ? "exceeds dmax"
                                         : (expect_equal ? "equality expected" : "unexpected equality")}});
            continue;
        }
        if (attained)
            rep.equality_cases.push_back(g);
    }
    rep.notes.push_back("equality counts only genera where some family pair attains dmax");
    for (const auto& tp : enumerate_family_pairs(g_max, FamilySelection::all)) {
        if (contributes_to_maximum(tp.family.kind))
            continue;
        ++rep.checked;
        if (tp.pair.d > dmax(tp.pair.g))
            rep.counterexamples.push_back(
                {{"pair", pair_json(tp.pair)}, {"family", name(tp.family)}, {"reason", "exceeds dmax"}});
    }
    return rep;
}

} // namespace dmcag::pairs
