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

#include "dmcag/satake.hpp"

#include <algorithm>

namespace dmcag::satake {

namespace {

Int binomial(Int n, Int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Int result = 1;
    for (Int i = 1; i <= k; ++i) {
        // result * (n - k + i) is divisible by i at every step
        result = checked_mul(result, n - k + i) / i;
    }
    return result;
}

Int pow2(Int e)
{
    if (e < 0 || e > 62)
        throw std::overflow_error("pow2: exponent out of range");
    return Int{1} << e;
}

void require(bool ok, const CaseLabel& label, const char* constraint)
{
    if (!ok)
        throw ParameterError(to_string(label.kind) + ": parameters violate " + constraint);
}

Int mod4(Int x)
{
    return ((x % 4) + 4) % 4;
}

} // namespace

std::string to_string(CaseKind kind)
{
    switch (kind) {
    case CaseKind::A1: return "A1";
    case CaseKind::D4: return "D4";
    case CaseKind::I: return "I";
    case CaseKind::Iprime: return "Iprime";
    case CaseKind::II: return "II";
    case CaseKind::III1: return "III1";
    case CaseKind::III2: return "III2";
    case CaseKind::IV1even: return "IV1even";
    case CaseKind::IV1odd: return "IV1odd";
    case CaseKind::IV2: return "IV2";
    }
    return "?";
}

std::string to_string(DualityType duality)
{
    switch (duality) {
    case DualityType::Symplectic: return "Symplectic";
    case DualityType::Orthogonal: return "Orthogonal";
    case DualityType::NSD: return "NSD";
    }
    return "?";
}

void validate(const CaseLabel& label)
{
    switch (label.kind) {
    case CaseKind::A1:
    case CaseKind::D4:
        return;
    case CaseKind::I:
        require(label.n >= 3, label, "n >= 3");
        require(label.p >= 1 && 2 * label.p <= label.n, label, "1 <= p <= n/2");
        return;
    case CaseKind::Iprime:
        require(label.n >= 4, label, "n >= 4");
        require(label.c >= 2 && label.c <= label.n - 2, label, "2 <= c <= n-2");
        return;
    case CaseKind::II:
        require(label.r >= 2 && label.r != 4, label, "r >= 2, r != 4");
        return;
    case CaseKind::III1:
    case CaseKind::III2:
        require(label.r >= 2, label, "r >= 2");
        return;
    case CaseKind::IV1even:
        require(label.p >= 3 && label.p != 4, label, "p >= 3, p != 4");
        return;
    case CaseKind::IV1odd:
        require(label.p >= 2, label, "p >= 2");
        return;
    case CaseKind::IV2:
        require(label.r >= 3 && label.r != 4, label, "r >= 3, r != 4");
        return;
    }
}

std::vector<std::pair<std::string, Int>> parameters(const CaseLabel& label)
{
    switch (label.kind) {
    case CaseKind::A1:
    case CaseKind::D4:
        return {};
    case CaseKind::I:
        return {{"p", label.p}, {"n", label.n}};
    case CaseKind::Iprime:
        return {{"n", label.n}, {"c", label.c}};
    case CaseKind::II:
    case CaseKind::III1:
    case CaseKind::III2:
    case CaseKind::IV2:
        return {{"r", label.r}};
    case CaseKind::IV1even:
    case CaseKind::IV1odd:
        return {{"p", label.p}};
    }
    return {};
}

std::string to_string(const CaseLabel& label)
{
    std::string s = to_string(label.kind);
    const auto params = parameters(label);
    if (params.empty())
        return s;
    s += "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i)
            s += ", ";
        s += params[i].first + "=" + std::to_string(params[i].second);
    }
    return s + ")";
}

Int hss_dimension(const CaseLabel& label)
{
    validate(label);
    switch (label.kind) {
    case CaseKind::A1: return 1;
    case CaseKind::D4: return 6;
    case CaseKind::I: return checked_mul(label.p, label.n - label.p);
    case CaseKind::Iprime: return label.n - 1;
    case CaseKind::II: return checked_mul(label.r, label.r - 1) / 2;
    case CaseKind::III1:
    case CaseKind::III2: return checked_mul(label.r, label.r + 1) / 2;
    case CaseKind::IV1even: return 2 * label.p - 2;
    case CaseKind::IV1odd: return 2 * label.p - 1;
    case CaseKind::IV2: return 2 * label.r - 2;
    }
    return 0;
}

Int rep_dimension(const CaseLabel& label)
{
    validate(label);
    switch (label.kind) {
    case CaseKind::A1: return 2;
    case CaseKind::D4: return 8;
    case CaseKind::I: return label.n;
    case CaseKind::Iprime: return binomial(label.n, label.c);
    case CaseKind::II:
    case CaseKind::III1:
    case CaseKind::III2: return checked_mul(2, label.r);
    case CaseKind::IV1even: return pow2(label.p - 1);
    case CaseKind::IV1odd: return pow2(label.p);
    case CaseKind::IV2: return pow2(label.r - 1);
    }
    return 0;
}

DualityType duality_type(const CaseLabel& label)
{
    validate(label);
    switch (label.kind) {
    case CaseKind::A1:
        return DualityType::Symplectic;
    case CaseKind::D4:
    case CaseKind::II:
        return DualityType::Orthogonal;
    case CaseKind::I:
        return DualityType::NSD;
    case CaseKind::Iprime:
        if (2 * label.c != label.n)
            return DualityType::NSD;
        return label.c % 2 == 0 ? DualityType::Orthogonal : DualityType::Symplectic;
    case CaseKind::III1:
    case CaseKind::III2:
        return DualityType::Symplectic;
    case CaseKind::IV1even:
    case CaseKind::IV2: {
        const Int m = mod4(label.kind == CaseKind::IV1even ? label.p : label.r);
        if (m == 2)
            return DualityType::Symplectic;
        if (m == 0)
            return DualityType::Orthogonal;
        return DualityType::NSD;
    }
    case CaseKind::IV1odd: {
        const Int m = mod4(label.p);
        return (m == 0 || m == 3) ? DualityType::Orthogonal : DualityType::Symplectic;
    }
    }
    return DualityType::NSD;
}

Int min_multiplicity(DualityType duality)
{
    return duality == DualityType::Symplectic ? 1 : 2;
}

Int min_compact_factors(const CaseLabel& label)
{
    validate(label);
    // Isotropy thresholds: quadratic forms in dimension >= 5, Hermitian forms
    // over a CM field in dimension >= 3, quaternionic Hermitian forms in
    // dimension >= 2, quaternionic skew-Hermitian forms in dimension >= 4.
    switch (label.kind) {
    case CaseKind::A1:
    case CaseKind::D4:
    case CaseKind::III1:
        return 0;
    case CaseKind::I:
    case CaseKind::Iprime:
        return label.n >= 3 ? 1 : 0;
    case CaseKind::II:
    case CaseKind::IV2:
        return label.r >= 4 ? 1 : 0;
    case CaseKind::III2:
        return label.r >= 2 ? 1 : 0;
    case CaseKind::IV1even:
        return 2 * label.p >= 5 ? 1 : 0;
    case CaseKind::IV1odd:
        return 2 * label.p + 1 >= 5 ? 1 : 0;
    }
    return 0;
}

SatakeCase make_case(const CaseLabel& label)
{
    return SatakeCase{label, hss_dimension(label), rep_dimension(label), duality_type(label),
                      min_compact_factors(label)};
}

std::vector<SatakeCase> catalog(Int rep_max)
{
    std::vector<SatakeCase> out;
    auto add = [&](const CaseLabel& label) {
        SatakeCase sc = make_case(label);
        if (sc.rep_dim <= rep_max)
            out.push_back(sc);
    };

    add(CaseLabel::a1());
    add(CaseLabel::d4());
    for (Int n = 3; n <= rep_max; ++n)
        for (Int p = 1; 2 * p <= n; ++p)
            add(CaseLabel::unitary(p, n));
    // binomial(n, c) >= binomial(n, 2) for 2 <= c <= n-2
    for (Int n = 4; binomial(n, 2) <= rep_max; ++n)
        for (Int c = 2; c <= n - 2; ++c)
            if (binomial(n, c) <= rep_max)
                add(CaseLabel::wedge(n, c));
    for (Int r = 2; 2 * r <= rep_max; ++r)
        if (r != 4)
            add(CaseLabel::so_star(r));
    for (Int r = 2; 2 * r <= rep_max; ++r)
        add(CaseLabel::sp_split(r));
    for (Int r = 2; 2 * r <= rep_max; ++r)
        add(CaseLabel::sp_quaternionic(r));
    for (Int p = 3; p <= 62 && pow2(p - 1) <= rep_max; ++p)
        if (p != 4)
            add(CaseLabel::half_spin(p));
    for (Int p = 2; p <= 61 && pow2(p) <= rep_max; ++p)
        add(CaseLabel::spin(p));
    for (Int r = 3; r <= 62 && pow2(r - 1) <= rep_max; ++r)
        if (r != 4)
            add(CaseLabel::quaternionic_spin(r));
    return out;
}

nlohmann::ordered_json to_json(const SatakeCase& sc)
{
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : parameters(sc.label))
        params[name] = value;
    nlohmann::ordered_json j;
    j["case"] = to_string(sc.label.kind);
    j["params"] = params;
    j["hss_dim"] = sc.hss_dim;
    j["rep_dim"] = sc.rep_dim;
    j["duality"] = to_string(sc.duality);
    j["min_compact_factors"] = sc.min_compact_factors;
    return j;
}

nlohmann::ordered_json catalog_json(Int rep_max)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& sc : catalog(rep_max))
        arr.push_back(to_json(sc));
    return arr;
}

} // namespace dmcag::satake
