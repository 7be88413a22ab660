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

#ifndef DMCAG_SATAKE_HPP
#define DMCAG_SATAKE_HPP

// Catalog of the simple Hermitian cases that admit a nontrivial symplectic
// embedding, together with the irreducible complex representation U that
// occurs.  Only the integer invariants used by the dimension estimates are
// recorded: the dimension of the symmetric space, dim U, the duality type of
// U, and whether anisotropy forces a compact real factor.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmcag/arith.hpp"
#include "json.hpp"

namespace dmcag::satake {

enum class CaseKind {
    A1,
    D4,
    I,        // SU_{p,n-p}, standard representation
    Iprime,   // SU_{n-1,1}, c-th exterior power
    II,       // SO*_{2r}
    III1,     // Sp_r, split form
    III2,     // Sp_r, quaternionic Hermitian form
    IV1even,  // SO_{2p-2,2}, half-spin
    IV1odd,   // SO_{2p-1,2}, spin
    IV2,      // SO_{2r-2,2} from a quaternionic skew-Hermitian form
};

enum class DualityType { Symplectic, Orthogonal, NSD };

std::string to_string(CaseKind kind);
std::string to_string(DualityType duality);

/// Thrown when a label's parameters violate the row constraints.
class ParameterError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A case together with its integer parameters.  Unused parameters are 0.
struct CaseLabel {
    CaseKind kind = CaseKind::A1;
    Int p = 0;
    Int n = 0;
    Int c = 0;
    Int r = 0;

    static CaseLabel a1() { return {CaseKind::A1}; }
    static CaseLabel d4() { return {CaseKind::D4}; }
    static CaseLabel unitary(Int p, Int n) { return {CaseKind::I, p, n, 0, 0}; }
    static CaseLabel wedge(Int n, Int c) { return {CaseKind::Iprime, 0, n, c, 0}; }
    static CaseLabel so_star(Int r) { return {CaseKind::II, 0, 0, 0, r}; }
    static CaseLabel sp_split(Int r) { return {CaseKind::III1, 0, 0, 0, r}; }
    static CaseLabel sp_quaternionic(Int r) { return {CaseKind::III2, 0, 0, 0, r}; }
    static CaseLabel half_spin(Int p) { return {CaseKind::IV1even, p, 0, 0, 0}; }
    static CaseLabel spin(Int p) { return {CaseKind::IV1odd, p, 0, 0, 0}; }
    static CaseLabel quaternionic_spin(Int r) { return {CaseKind::IV2, 0, 0, 0, r}; }

    friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
    friend auto operator<=>(const CaseLabel&, const CaseLabel&) = default;
};

/// Throws ParameterError naming the violated constraint.
void validate(const CaseLabel& label);

/// Parameters in the order the catalog exports them, e.g. {"p": 3, "n": 7}.
std::vector<std::pair<std::string, Int>> parameters(const CaseLabel& label);

std::string to_string(const CaseLabel& label);

Int hss_dimension(const CaseLabel& label);
Int rep_dimension(const CaseLabel& label);
DualityType duality_type(const CaseLabel& label);

/// Smallest isotypic multiplicity compatible with a symplectic form on the
/// rational representation: 1 when U is symplectic, 2 otherwise.
Int min_multiplicity(DualityType duality);

/// 1 when anisotropy of the ambient group is known to force a compact real
/// factor, 0 otherwise.
Int min_compact_factors(const CaseLabel& label);

struct SatakeCase {
    CaseLabel label;
    Int hss_dim = 0;
    Int rep_dim = 0;
    DualityType duality = DualityType::NSD;
    Int min_compact_factors = 0;

    friend bool operator==(const SatakeCase&, const SatakeCase&) = default;
};

SatakeCase make_case(const CaseLabel& label);

/// Every valid case with rep_dim <= rep_max, in a fixed order: by kind, then
/// by parameters.
std::vector<SatakeCase> catalog(Int rep_max);

nlohmann::ordered_json to_json(const SatakeCase& sc);
nlohmann::ordered_json catalog_json(Int rep_max);

} // namespace dmcag::satake

#endif // DMCAG_SATAKE_HPP
