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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using dmcag::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}

TEST_SUITE("cli") {

TEST_CASE("dmax")
{
    auto r = call({"dmax", "16..18", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "g,dmax\n16,16\n17,16\n18,20\n");
    r = call({"dmax", "1", "--format", "csv"});
    CHECK(r.out == "g,dmax\n1,0\n");
    r = call({"dmax", "100", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["rows"][0]["dmax"] == 625);
    CHECK(call({"dmax", "0"}).code == 2);
    CHECK(call({"dmax", "5..3"}).code == 2);
    CHECK(call({"dmax", "abc"}).code == 2);
    CHECK(call({"dmax", "1..2000000"}).code == 2);
    CHECK(call({"dmax"}).code == 2);
}

TEST_CASE("tables")
{
    auto r = call({"tables", "--format", "csv", "--check"});
    CHECK(r.code == 0);
    CHECK(r.err.find("match") != std::string::npos);
    r = call({"tables", "--format", "markdown"});
    CHECK(r.code == 0);
    CHECK(r.out.find("| g | 3 | 4 | 5 | 6 | 15 | 16 | 17 | 18 | 100 |") != std::string::npos);
    r = call({"tables", "--format", "json", "--conjectural", "--check"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["tables"][1]["rows"][7]["conjectural"] == true);
    r = call({"tables", "--table", "mg", "--check", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("g,mgct_dmcg", 0) == 0);
    CHECK(call({"tables", "--format", "xml"}).code == 2);
    CHECK(call({"tables", "--table", "x"}).code == 2);
}

TEST_CASE("output is deterministic")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"tables", "--format", "json"},
             {"verify", "lemma-N", "--sum-max", "30", "--jobs", "1"},
             {"explain", "17", "--format", "json"},
             {"catalog", "--rep-max", "16"}}) {
        const auto a = call(args);
        const auto b = call(args);
        CHECK(a.out == b.out);
    }
    CHECK(call({"verify", "lemma-N", "--jobs", "1"}).out == call({"verify", "lemma-N", "--jobs", "8"}).out);
    const auto stamped = call({"tables", "--format", "json", "--timestamp"});
    CHECK(nlohmann::json::parse(stamped.out).contains("generated_at"));
}

TEST_CASE("verify")
{
    auto r = call({"verify", "lemma-N", "--sum-max", "60"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["status"] == "pass");
    r = call({"verify", "lemma-dmax", "--g-max", "4000"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["equality_cases"].size() == 1992);
    CHECK(j["equality_cases"][0] == nlohmann::json::array({1, 16}));
    r = call({"verify", "prop-estimate", "--g-max", "2000"});
    CHECK(r.code == 0);
    for (const char* id : {"claim-F", "remark-domination", "cor-C", "cor-decoupled", "thm-B", "lemma-nondecoupled"})
        CHECK(call({"verify", id}).code == 0);
    r = call({"verify", "cor-C", "--g-max", "30"});
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["counterexamples"].size() == 7);
    r = call({"verify", "thm-B", "--format", "markdown"});
    CHECK(r.out.find("- status: pass") != std::string::npos);
}

TEST_CASE("verify usage errors")
{
    CHECK(call({"verify", "no-such-claim"}).code == 2);
    CHECK(call({"verify"}).code == 2);
    CHECK(call({"verify", "lemma-N", "--g-max", "10"}).code == 2);
    CHECK(call({"verify", "lemma-N", "--sum-max", "500"}).code == 2);
    CHECK(call({"verify", "lemma-N", "--sum-max", "1"}).code == 2);
    CHECK(call({"verify", "lemma-dmax", "--jobs", "0"}).code == 2);
    CHECK(call({"verify", "lemma-N", "--format", "csv"}).code == 2);
    CHECK(call({"verify", "cor-C", "--g-max", "2000"}).code == 2);
    CHECK(call({"verify", "lemma-N", "--sum-max", "abc"}).code == 2);
}

TEST_CASE("explain")
{
    auto r = call({"explain", "16"});
    CHECK(r.code == 0);
    CHECK(r.out.find("case (iii)") != std::string::npos);
    CHECK(r.out.find("SpecialFamily(k=2, n=8), dim 16") != std::string::npos);
    r = call({"explain", "19"});
    CHECK(r.out.find("case (iv)") != std::string::npos);
    CHECK(r.out.find("ProductWithPoint(SpecialFamily(k=2, n=9)), dim 20") != std::string::npos);
    r = call({"explain", "7"});
    CHECK(r.out.find("case (ii)") != std::string::npos);
    CHECK(r.out.find("HodgeGeneric, dim 6") != std::string::npos);
    r = call({"explain", "17", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out)["attained_by"].size() == 2);
    CHECK(call({"explain", "0"}).code == 2);
    CHECK(call({"explain", "-4"}).code == 2);
    CHECK(call({"explain", "100000"}).code == 2);
    CHECK(call({"explain"}).code == 2);
}

TEST_CASE("catalog")
{
    auto r = call({"catalog", "--rep-max", "8"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["cases"].size() == 30);
    r = call({"catalog", "--rep-max", "8", "--format", "csv"});
    CHECK(r.out.rfind("case,hss_dim,rep_dim,duality,min_compact_factors\n\"A1\",1,2,Symplectic,0\n", 0) == 0);
    CHECK(call({"catalog", "--rep-max", "1"}).code == 2);
}

TEST_CASE("schemas, help and files")
{
    for (const char* cmd : {"dmax", "tables", "verify", "explain", "catalog"}) {
        const auto r = call({cmd, "--schema"});
        CHECK(r.code == 0);
        CHECK(nlohmann::json::parse(r.out).contains("$schema"));
    }
    CHECK(call({"--help"}).code == 0);
    CHECK(call({"verify", "--help"}).code == 0);
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);

    const auto path = std::filesystem::temp_directory_path() / "dmcag_cli_test_out.csv";
    auto r = call({"dmax", "16..17", "--format", "csv", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == "g,dmax\n16,16\n17,16\n");
    std::filesystem::remove(path);
    CHECK(call({"dmax", "3", "--out", "/nonexistent-dir/x"}).code == 2);
}

}
