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
#include <algorithm>
#include <fstream>
#include <set>

#include "doctest.h"
#include "dmcag/moduli.hpp"
#include "dmcag/satake.hpp"
#include "json.hpp"

using namespace dmcag;
using namespace dmcag::satake;

namespace {

nlohmann::ordered_json load_fixture(const std::string& name)
{
    std::ifstream in(std::string(DMCAG_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    return nlohmann::ordered_json::parse(in);
}

// Every label with parameters up to a generous box, filtered by validity and
// rep_dim.  Independent of the catalog's own loop bounds.
std::set<CaseLabel> brute_force_labels(Int rep_max)
{
    std::vector<CaseLabel> candidates{CaseLabel::a1(), CaseLabel::d4()};
    for (Int n = 0; n <= rep_max + 2; ++n)
        for (Int p = 0; p <= n; ++p)
            candidates.push_back(CaseLabel::unitary(p, n));
    for (Int n = 0; n <= 50; ++n)
        for (Int c = 0; c <= n; ++c)
            candidates.push_back(CaseLabel::wedge(n, c));
    for (Int r = 0; r <= rep_max; ++r) {
        candidates.push_back(CaseLabel::so_star(r));
        candidates.push_back(CaseLabel::sp_split(r));
        candidates.push_back(CaseLabel::sp_quaternionic(r));
    }
    for (Int p = 0; p <= 24; ++p) {
        candidates.push_back(CaseLabel::half_spin(p));
        candidates.push_back(CaseLabel::spin(p));
        candidates.push_back(CaseLabel::quaternionic_spin(p));
    }
    std::set<CaseLabel> out;
    for (const auto& label : candidates) {
        try {
            validate(label);
        } catch (const ParameterError&) {
            continue;
        }
        if (rep_dimension(label) <= rep_max)
            out.insert(label);
    }
    return out;
}

}

TEST_SUITE("satake") {

TEST_CASE("hss_dimension examples")
{
    CHECK(hss_dimension(CaseLabel::unitary(3, 7)) == 12);
    CHECK(hss_dimension(CaseLabel::sp_split(2)) == 3);
    CHECK(hss_dimension(CaseLabel::a1()) == 1);
    CHECK(hss_dimension(CaseLabel::d4()) == 6);
    CHECK(hss_dimension(CaseLabel::wedge(6, 3)) == 5);
    CHECK(hss_dimension(CaseLabel::so_star(5)) == 10);
    CHECK(hss_dimension(CaseLabel::sp_quaternionic(3)) == 6);
    CHECK(hss_dimension(CaseLabel::half_spin(6)) == 10);
    CHECK(hss_dimension(CaseLabel::spin(4)) == 7);
    CHECK(hss_dimension(CaseLabel::quaternionic_spin(5)) == 8);
}

TEST_CASE("rep_dimension examples")
{
    CHECK(rep_dimension(CaseLabel::wedge(6, 3)) == 20);
    CHECK(rep_dimension(CaseLabel::spin(4)) == 16);
    CHECK(rep_dimension(CaseLabel::so_star(5)) == 10);
    CHECK(rep_dimension(CaseLabel::a1()) == 2);
    CHECK(rep_dimension(CaseLabel::d4()) == 8);
    CHECK(rep_dimension(CaseLabel::unitary(2, 9)) == 9);
    CHECK(rep_dimension(CaseLabel::half_spin(6)) == 32);
    CHECK(rep_dimension(CaseLabel::quaternionic_spin(5)) == 16);
    CHECK(rep_dimension(CaseLabel::sp_split(7)) == 14);
}

TEST_CASE("duality rules")
{
    CHECK(duality_type(CaseLabel::half_spin(6)) == DualityType::Symplectic);
    CHECK(duality_type(CaseLabel::half_spin(8)) == DualityType::Orthogonal);
    CHECK(duality_type(CaseLabel::half_spin(5)) == DualityType::NSD);
    CHECK(duality_type(CaseLabel::wedge(6, 3)) == DualityType::Symplectic);
    CHECK(duality_type(CaseLabel::wedge(8, 4)) == DualityType::Orthogonal);
    CHECK(duality_type(CaseLabel::wedge(6, 2)) == DualityType::NSD);
    CHECK(duality_type(CaseLabel::unitary(1, 3)) == DualityType::NSD);
    CHECK(duality_type(CaseLabel::a1()) == DualityType::Symplectic);
    CHECK(duality_type(CaseLabel::d4()) == DualityType::Orthogonal);
    CHECK(duality_type(CaseLabel::so_star(5)) == DualityType::Orthogonal);
    CHECK(duality_type(CaseLabel::sp_split(3)) == DualityType::Symplectic);
    CHECK(duality_type(CaseLabel::sp_quaternionic(3)) == DualityType::Symplectic);
    CHECK(duality_type(CaseLabel::spin(2)) == DualityType::Symplectic);
    CHECK(duality_type(CaseLabel::spin(3)) == DualityType::Orthogonal);
    CHECK(duality_type(CaseLabel::spin(4)) == DualityType::Orthogonal);
    CHECK(duality_type(CaseLabel::spin(5)) == DualityType::Symplectic);
    CHECK(duality_type(CaseLabel::quaternionic_spin(6)) == DualityType::Symplectic);
    CHECK(duality_type(CaseLabel::quaternionic_spin(8)) == DualityType::Orthogonal);
    CHECK(duality_type(CaseLabel::quaternionic_spin(5)) == DualityType::NSD);
}

TEST_CASE("min_multiplicity")
{
    CHECK(min_multiplicity(DualityType::Symplectic) == 1);
    CHECK(min_multiplicity(DualityType::Orthogonal) == 2);
    CHECK(min_multiplicity(DualityType::NSD) == 2);
}

TEST_CASE("parameter constraints are enforced")
{
    const std::vector<CaseLabel> invalid{
        CaseLabel::unitary(0, 3),       CaseLabel::unitary(2, 3),  CaseLabel::unitary(1, 2),
        CaseLabel::wedge(3, 1),         CaseLabel::wedge(5, 1),    CaseLabel::wedge(5, 4),
        CaseLabel::so_star(4),          CaseLabel::so_star(1),     CaseLabel::sp_split(1),
        CaseLabel::sp_quaternionic(1),  CaseLabel::half_spin(4),   CaseLabel::half_spin(2),
        CaseLabel::spin(1),             CaseLabel::quaternionic_spin(4), CaseLabel::quaternionic_spin(2),
    };
    for (const auto& label : invalid) {
        CAPTURE(to_string(label));
        CHECK_THROWS_AS(validate(label), ParameterError);
        CHECK_THROWS_AS(hss_dimension(label), ParameterError);
        CHECK_THROWS_AS(rep_dimension(label), ParameterError);
        CHECK_THROWS_AS(duality_type(label), ParameterError);
    }
    CHECK_NOTHROW(validate(CaseLabel::wedge(4, 2)));
    CHECK_NOTHROW(validate(CaseLabel::so_star(2)));
    CHECK_NOTHROW(validate(CaseLabel::half_spin(3)));
}

TEST_CASE("catalog matches the hand-computed fixture for rep_dim <= 8")
{
    const auto fixture = load_fixture("catalog_rep8.json");
    std::multiset<std::string> expected;
    for (const auto& row : fixture.at("cases"))
        expected.insert(row.dump());
    std::multiset<std::string> actual;
    for (const auto& row : catalog_json(fixture.at("rep_max").get<Int>()))
        actual.insert(row.dump());
    CHECK(actual.size() == 30);
    CHECK(actual == expected);
}

TEST_CASE("catalog JSON field order")
{
    const auto j = to_json(make_case(CaseLabel::unitary(3, 7)));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"case", "params", "hss_dim", "rep_dim", "duality", "min_compact_factors"});
    CHECK(j.dump() ==
          R"({"case":"I","params":{"p":3,"n":7},"hss_dim":12,"rep_dim":7,"duality":"NSD","min_compact_factors":1})");
}

TEST_CASE("catalog completeness against a brute-force label scan")
{
    for (Int cap : {2, 8, 64, 1024}) {
        CAPTURE(cap);
        std::set<CaseLabel> from_catalog;
        for (const auto& sc : catalog(cap)) {
            CHECK(from_catalog.insert(sc.label).second);  // no duplicates
            CHECK(sc == make_case(sc.label));
        }
        CHECK(from_catalog == brute_force_labels(cap));
    }
}

TEST_CASE("catalog invariants")
{
    for (const auto& sc : catalog(1024)) {
        CAPTURE(to_string(sc.label));
        CHECK(sc.rep_dim >= 2);
        CHECK(sc.hss_dim >= 1);
        CHECK((sc.min_compact_factors == 0 || sc.min_compact_factors == 1));
        CHECK(sc.rep_dim <= 1024);
    }
}

TEST_CASE("min_compact_factors data")
{
    CHECK(min_compact_factors(CaseLabel::a1()) == 0);
    CHECK(min_compact_factors(CaseLabel::d4()) == 0);
    CHECK(min_compact_factors(CaseLabel::unitary(1, 3)) == 1);
    CHECK(min_compact_factors(CaseLabel::wedge(6, 3)) == 1);
    CHECK(min_compact_factors(CaseLabel::so_star(3)) == 0);
    CHECK(min_compact_factors(CaseLabel::so_star(5)) == 1);
    CHECK(min_compact_factors(CaseLabel::sp_split(5)) == 0);
    CHECK(min_compact_factors(CaseLabel::sp_quaternionic(2)) == 1);
    CHECK(min_compact_factors(CaseLabel::half_spin(3)) == 1);
    CHECK(min_compact_factors(CaseLabel::spin(2)) == 1);
    CHECK(min_compact_factors(CaseLabel::quaternionic_spin(3)) == 0);
    CHECK(min_compact_factors(CaseLabel::quaternionic_spin(5)) == 1);
}

TEST_CASE("decoupled bound over the catalog")
{
    const auto rep = moduli::verify_cor_decoupled(1024, 12);
    CHECK(rep.passed());
    CHECK_FALSE(rep.equality_cases.empty());
    for (const auto& e : rep.equality_cases) {
        CHECK(e.at("k") == 2);
        CHECK(e.at("case").get<std::string>().rfind("I(", 0) == 0);
    }
    // independent recount: type I, k = 2, equality iff p(n-p) = dmax(2n)
    std::size_t expected = 0;
    for (const auto& sc : catalog(1024))
        if (sc.label.kind == CaseKind::I && sc.hss_dim == dmax(2 * sc.rep_dim))
            ++expected;
    CHECK(rep.equality_cases.size() == expected);
}

}
