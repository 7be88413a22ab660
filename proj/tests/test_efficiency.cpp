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
#include <limits>
#include <vector>

#include "doctest.h"
#include "dmcag/efficiency.hpp"

using namespace dmcag;
using namespace dmcag::efficiency;

TEST_SUITE("efficiency") {

TEST_CASE("multiset canonical form")
{
    CHECK(Multiset{5, 2, 3} == Multiset{2, 3, 5});
    CHECK(Multiset{5, 2, 3}.to_string() == "{2,3,5}");
    CHECK(Multiset{2, 2}.sum() == 4);
    CHECK(Multiset{2, 2} != Multiset{2});
    CHECK_THROWS_AS(Multiset({1, 3}), std::domain_error);
    CHECK_THROWS_AS(Multiset({0}), std::domain_error);
}

TEST_CASE("prod_sum")
{
    auto ps = prod_sum(Multiset{2, 2, 2});
    CHECK(ps.prod == 8);
    CHECK(ps.sum == 6);
    ps = prod_sum(Multiset{3, 5});
    CHECK(ps.prod == 15);
    CHECK(ps.sum == 8);
    ps = prod_sum(Multiset{7});
    CHECK(ps.prod == 7);
    CHECK(ps.sum == 7);
    CHECK_THROWS_AS(prod_sum(Multiset{}), std::domain_error);
    CHECK_THROWS_AS(prod_sum(Multiset(std::vector<Int>(70, 2))), std::overflow_error);
}

TEST_CASE("prod >= sum for at least two elements, equal for singletons")
{
    for_each_multiset(30, [](const Multiset& n) {
        const auto ps = prod_sum(n);
        if (n.size() == 1)
            CHECK(ps.prod == ps.sum);
        else
            CHECK(ps.prod >= ps.sum);
    });
}

TEST_CASE("closed form examples")
{
    CHECK(is_efficient_closed(Multiset{2, 2, 3}));
    CHECK_FALSE(is_efficient_closed(Multiset{2, 2, 4}));
    CHECK_FALSE(is_efficient_closed(Multiset{2, 3, 3}));
    CHECK(is_efficient_closed(Multiset{9}));
    CHECK(is_efficient_closed(Multiset{3, 5}));
    CHECK_FALSE(is_efficient_closed(Multiset{3, 6}));
    CHECK_FALSE(is_efficient_closed(Multiset{4, 4}));
    CHECK(is_efficient_closed(Multiset{2, 1000}));
}

TEST_CASE("oracle examples")
{
    CHECK_FALSE(is_efficient_oracle(Multiset{3, 6}));
    CHECK(is_efficient_oracle(Multiset{2, 100}));
    CHECK_FALSE(is_efficient_oracle(Multiset{2, 2, 2, 2}));
    CHECK(is_efficient_oracle(Multiset{2, 2, 2}));
    CHECK_THROWS_AS(is_efficient_oracle(Multiset{}), std::domain_error);
    // early exit keeps huge multisets from overflowing
    CHECK_FALSE(is_efficient_oracle(Multiset(std::vector<Int>(200, 3))));
}

TEST_CASE("enumeration count matches the partition count")
{
    // q(n) = number of partitions of n into parts >= 2, by the standard DP
    const Int sum_max = 60;
    std::vector<Int> q(sum_max + 1, 0);
    q[0] = 1;
    for (Int part = 2; part <= sum_max; ++part)
        for (Int n = part; n <= sum_max; ++n)
            q[static_cast<std::size_t>(n)] += q[static_cast<std::size_t>(n - part)];
    Int expected = 0;
    for (Int n = 2; n <= sum_max; ++n)
        expected += q[static_cast<std::size_t>(n)];

    Int count = 0;
    Multiset previous;
    bool ordered = true;
    for_each_multiset(sum_max, [&](const Multiset& n) {
        ++count;
        if (count > 1 && !(previous < n))
            ordered = false;
        previous = n;
    });
    CHECK(count == expected);
    CHECK(ordered);
}

TEST_CASE("closed form equals oracle for every multiset with sum <= 60")
{
    Int efficient_large_sporadic = 0;
    for_each_multiset(60, [&](const Multiset& n) {
        if (is_efficient_closed(n) != is_efficient_oracle(n))
            FAIL("disagreement on " << n.to_string());
        const auto e = n.elements();
        const bool family = n.size() == 1 || (n.size() == 2 && e[0] == 2);
        if (is_efficient_oracle(n) && !family && n.sum() > 14)
            ++efficient_large_sporadic;
    });
    CHECK(efficient_large_sporadic == 0);
}

TEST_CASE("two-element characterization")
{
    for (Int a = 2; a <= 200; ++a)
        for (Int b = a; b <= 200; ++b)
            CHECK(is_efficient_oracle(Multiset{a, b}) == ((a - 2) * (b - 2) < 4));
}

TEST_CASE("inefficiency is monotone")
{
    for_each_multiset(40, [](const Multiset& n) {
        if (is_efficient_oracle(n))
            return;
        const auto e = n.elements();
        for (std::size_t i = 0; i < e.size(); ++i) {
            std::vector<Int> raised(e.begin(), e.end());
            raised[i] += 1;
            CHECK_FALSE(is_efficient_oracle(Multiset(raised)));
        }
        for (Int extra = 2; extra <= 6; ++extra) {
            std::vector<Int> grown(e.begin(), e.end());
            grown.push_back(extra);
            CHECK_FALSE(is_efficient_oracle(Multiset(grown)));
        }
    });
}

TEST_CASE("lemma N report")
{
    const auto rep = verify_lemma_N(60, 1);
    CHECK(rep.passed());
    std::vector<std::string> sporadic;
    for (const auto& w : rep.witnesses)
        sporadic.push_back(w.dump());
    CHECK(sporadic == std::vector<std::string>{"[2,2,2]", "[2,2,3]", "[3,3]", "[3,4]", "[3,5]"});
    // report does not depend on the worker count
    CHECK(verify_lemma_N(60, 4).to_json() == rep.to_json());
    CHECK(verify_lemma_N(1, 1).checked == 0);
}

TEST_CASE("decoupling bound skeleton")
{
    const std::vector<Summand> two{{2, 4}, {3, 3}};
    auto c = check_decoupling_bound(two, 20);
    CHECK(c.genus_ok);
    CHECK(c.lower_genus == 17);
    CHECK(c.summed_dmax == dmax(8) + dmax(9));
    CHECK(c.chain_ok);
    c = check_decoupling_bound(two, 16);
    CHECK_FALSE(c.genus_ok);
    CHECK_FALSE(c.chain_ok);
    const std::vector<Summand> bad{{1, 1}};
    CHECK_THROWS_AS(check_decoupling_bound(bad, 10), std::domain_error);
}

TEST_CASE("non-decoupled inequalities")
{
    const auto rep = verify_non_decoupled(200, 20, 40);
    CHECK(rep.passed());
    CHECK(rep.checked > 0);
}

}
