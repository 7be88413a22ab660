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

#include "dmcag/efficiency.hpp"

#include <algorithm>
#include <stdexcept>

#include "dmcag/parallel.hpp"

namespace dmcag::efficiency {

namespace {

nlohmann::ordered_json multiset_json(const Multiset& n)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (Int e : n.elements())
        arr.push_back(e);
    return arr;
}

// Extends prefix (non-decreasing, current sum `sum`) by elements >= lo.
void extend(std::vector<Int>& prefix, Int sum, Int lo, Int sum_max,
            const std::function<void(const Multiset&)>& visit)
{
    for (Int e = lo; sum + e <= sum_max; ++e) {
        prefix.push_back(e);
        visit(Multiset(prefix));
        extend(prefix, sum + e, e, sum_max, visit);
        prefix.pop_back();
    }
}

// Efficient multisets other than {b} and {2, b}.
bool is_sporadic(const Multiset& n)
{
    if (n.size() <= 1)
        return false;
    return !(n.size() == 2 && n.elements()[0] == 2);
}

struct LemmaNPartial {
    Int checked = 0;
    std::vector<nlohmann::ordered_json> counterexamples;
    std::vector<nlohmann::ordered_json> sporadic;
    std::vector<nlohmann::ordered_json> large_efficient;  // sum > 14
};

} // namespace

Multiset::Multiset(std::initializer_list<Int> elements) : Multiset(std::vector<Int>(elements)) {}

Multiset::Multiset(std::vector<Int> elements) : elements_(std::move(elements))
{
    for (Int e : elements_)
        if (e < 2)
            throw std::domain_error("Multiset: elements must be >= 2, got " + std::to_string(e));
    std::sort(elements_.begin(), elements_.end());
}

Int Multiset::sum() const
{
    Int s = 0;
    for (Int e : elements_)
        s = checked_add(s, e);
    return s;
}

std::string Multiset::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(elements_[i]);
    }
    return s + "}";
}

ProdSum prod_sum(const Multiset& n)
{
    if (n.empty())
        throw std::domain_error("prod_sum: empty multiset");
    Int prod = 1;
    for (Int e : n.elements())
        prod = checked_mul(prod, e);
    return ProdSum{prod, n.sum()};
}

bool is_efficient_closed(const Multiset& n)
{
    const auto e = n.elements();
    switch (e.size()) {
    case 1:
        return true;
    case 2:
        return e[0] == 2 || (e[0] == 3 && e[1] <= 5);
    case 3:
        return e[0] == 2 && e[1] == 2 && e[2] <= 3;
    default:
        return false;
    }
}

bool is_efficient_oracle(const Multiset& n)
{
    if (n.empty())
        throw std::domain_error("is_efficient_oracle: empty multiset");
    const Int limit = checked_mul(2, n.sum());
    Int prod = 1;
    for (Int e : n.elements()) {
        prod = checked_mul(prod, e);
        // every remaining factor is >= 2, so the product only grows
        if (prod >= limit)
            return false;
    }
    return prod < limit;
}

void for_each_multiset_with_min(Int sum_max, Int first,
                                const std::function<void(const Multiset&)>& visit)
{
    if (first < 2 || first > sum_max)
        return;
    std::vector<Int> prefix{first};
    visit(Multiset(prefix));
    extend(prefix, first, first, sum_max, visit);
}

void for_each_multiset(Int sum_max, const std::function<void(const Multiset&)>& visit)
{
    for (Int first = 2; first <= sum_max; ++first)
        for_each_multiset_with_min(sum_max, first, visit);
}

VerificationReport verify_lemma_N(Int sum_max, unsigned jobs)
{
    VerificationReport rep;
    rep.claim = "lemma-N";
    rep.range = {{"sum_max", sum_max}};
    if (sum_max < 2)
        return rep;

    const auto firsts = static_cast<std::size_t>(sum_max - 1);
    auto partials = run_indexed<LemmaNPartial>(firsts, jobs, [&](std::size_t i) {
        LemmaNPartial part;
        for_each_multiset_with_min(sum_max, static_cast<Int>(i) + 2, [&](const Multiset& n) {
            ++part.checked;
            const bool closed = is_efficient_closed(n);
            const bool oracle = is_efficient_oracle(n);
            if (closed != oracle)
                part.counterexamples.push_back({{"multiset", multiset_json(n)},
                                                {"closed_form", closed},
                                                {"oracle", oracle}});
            if (oracle && is_sporadic(n))
                part.sporadic.push_back(multiset_json(n));
            if (oracle && n.sum() > 14 && is_sporadic(n))
                part.large_efficient.push_back(multiset_json(n));
        });
        return part;
    });

    Int family_members_above_14 = 0;
    for (auto& part : partials) {
        rep.checked += part.checked;
        for (auto& c : part.counterexamples)
            rep.counterexamples.push_back(std::move(c));
        for (auto& w : part.sporadic)
            rep.witnesses.push_back(std::move(w));
        for (auto& w : part.large_efficient)
            rep.counterexamples.push_back({{"multiset", w}, {"reason", "efficient with sum > 14"}});
    }
    // Singletons {b} and pairs {2, b} are efficient for every b; count the
    // ones above 14 so the report states it.
    for (Int s = 15; s <= sum_max; ++s)
        family_members_above_14 += (s >= 4) ? 2 : 1;
    rep.notes.push_back("witnesses list the efficient multisets outside the families {b} and {2,b}");
    rep.notes.push_back(std::to_string(family_members_above_14) +
                        " members of {b}, {2,b} have sum > 14; all other efficient multisets have sum <= 14");
    return rep;
}

DecouplingCheck check_decoupling_bound(std::span<const Summand> summands, Int g)
{
    DecouplingCheck out;
    for (const auto& s : summands) {
        if (s.k < 1 || s.dim_u < 2)
            throw std::domain_error("check_decoupling_bound: need k >= 1 and dim U >= 2");
        const Int w = checked_mul(s.k, s.dim_u);
        out.lower_genus = checked_add(out.lower_genus, w);
        out.summed_dmax = checked_add(out.summed_dmax, dmax(w));
    }
    out.genus_ok = !summands.empty() && g >= out.lower_genus;
    if (!out.genus_ok)
        return out;
    out.dmax_g = dmax(g);
    out.chain_ok = out.summed_dmax <= dmax(out.lower_genus) && dmax(out.lower_genus) <= out.dmax_g;
    return out;
}

VerificationReport verify_non_decoupled(Int b_max, Int l_max, Int g_max)
{
    VerificationReport rep;
    rep.claim = "lemma-nondecoupled";
    rep.range = {{"b_max", b_max}, {"l_max", l_max}, {"g_max", g_max}};

    for (Int b = 3; b <= b_max; ++b)
        for (Int l1 = 0; l1 <= l_max; ++l1)
            for (Int l2 = 1; l2 <= l_max; ++l2) {
                if (l1 + l2 < 2)
                    continue;
                ++rep.checked;
                const Int lhs = l1 + l2 * dmax(b);
                const Int rhs = dmax(b * (l1 + l2));
                if (!(lhs < rhs))
                    rep.counterexamples.push_back(
                        {{"case", "{2,b}"}, {"b", b}, {"l1", l1}, {"l2", l2}, {"lhs", lhs}, {"rhs", rhs}});
            }

    for (Int r = 5; 2 * r <= b_max; ++r)
        for (Int l1 = 0; l1 <= l_max; ++l1)
            for (Int l2 = 1; l2 <= l_max; ++l2) {
                if (l1 + l2 < 2)
                    continue;
                ++rep.checked;
                const Int d = l1 + l2 * (r * (r - 1) / 2);
                const Int g = 2 * r * (l1 + l2);
                if (d >= g - 1 && !(dmax(g) > d + 1))
                    rep.counterexamples.push_back(
                        {{"case", "(II)_r"}, {"r", r}, {"l1", l1}, {"l2", l2}, {"d", d}, {"g", g}});
            }

    // Summand lists as multisets of weights w = k dim U >= 2; the chain only
    // depends on the weights.  Strict unless there is a single summand.
    for_each_multiset(g_max, [&](const Multiset& weights) {
        ++rep.checked;
        Int summed = 0;
        for (Int w : weights.elements())
            summed += dmax(w);
        const Int total = weights.sum();
        const bool ok = weights.size() == 1 ? summed == dmax(total) : summed < dmax(total);
        if (!ok)
            rep.counterexamples.push_back(
                {{"case", "chain"}, {"weights", multiset_json(weights)}, {"summed_dmax", summed},
                 {"dmax_total", dmax(total)}});
    });
    return rep;
}

} // namespace dmcag::efficiency
