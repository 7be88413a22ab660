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

#ifndef DMCAG_MODULI_HPP
#define DMCAG_MODULI_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmcag/arith.hpp"
#include "dmcag/pairs.hpp"
#include "dmcag/report.hpp"

namespace dmcag::moduli {

/// A recursion disagreed with the closed form it is supposed to reproduce.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class AttainmentKind {
    Point,             // A_0
    HodgeGeneric,      // dimension g - 1
    ShimuraCurve,      // the (1, 2) curve
    SpecialFamily,     // ((k-1) F(n), k n)
    ProductWithPoint,  // point of A_1 times a maximal subvariety of A_{g-1}
};

struct Attainment {
    AttainmentKind kind = AttainmentKind::HodgeGeneric;
    Int g = 0;
    Int k = 0;
    Int n = 0;
    std::vector<Attainment> inner;  // one element for ProductWithPoint

    /// Dimension of the construction, evaluated from its own formula.
    Int dimension() const;
    std::string to_string() const;

    friend bool operator==(const Attainment&, const Attainment&) = default;
};

struct AgResult {
    Int g = 0;
    Int dmc = 0;
    std::vector<Attainment> attained_by;
};

/// dmc(A_g) for 0 <= g <= g_max through
///   dmc(g) = max(M(g), max_{0 <= g' < g} (g - g' - 1 + M(g'))),
/// with M the superadditive closure from pairs::MdspTable.  M is only a
/// lower bound for the special-subvariety maximum below genus 16, where
/// every indecomposable pair is negligible and the g' = 0 term wins anyway;
/// every value is compared with dmax and a mismatch throws
/// InconsistencyError.
class AgTable {
public:
    explicit AgTable(Int g_max);

    Int g_max() const { return mdsp_.g_max(); }
    const pairs::MdspTable& mdsp() const { return mdsp_; }
    AgResult result(Int g) const;

private:
    pairs::MdspTable mdsp_;
    std::vector<Int> dmc_;
};

AgResult dmc_ag(Int g);

/// Case label (o) .. (v) of the classification of maximal compact
/// subvarieties, for g >= 1.
std::string maxvar_case(Int g);

/// Values of the boundary recursion for M_g^ct:
///   R(2) = 1, R(3) = 2,
///   R(g) = max(dmax(g), max_{g' + g'' = g} pointed(g') + pointed(g'')),
///   pointed(1) = 0, pointed(k) = 1 + R(k).
/// Valid as an upper bound only while dmax(g) < floor(3g/2) - 2 (from g = 4
/// on); interior_ok records that hypothesis per genus.
struct MgctRecursionRow {
    Int g = 0;
    Int value = 0;
    Int closed_form = 0;  // floor(3g/2) - 2
    Int interior = 0;     // dmax(g)
    bool interior_ok = true;
};

std::vector<MgctRecursionRow> mgct_recursion(Int g_max);

inline constexpr Int kMgctExactMax = 23;

struct MgctResult {
    Int g = 0;
    GenusValue value;                  // exact for g <= 23, else lower bound
    std::optional<GenusValue> upper;   // present for g >= 24
    bool open = false;
    std::vector<std::string> provenance;
};

MgctResult dmc_mgct(Int g);

struct Bounds {
    Int lower = 0;
    Int upper = 0;
};

struct JacobianBounds {
    Int lower = 0;
    Int upper = 0;
    Int upper_from_ag = 0;    // dmax(g)
    Int upper_from_mgct = 0;  // floor(3g/2) - 2 for g <= 23, else 2g - 4
};

JacobianBounds jacobian_bounds(Int g);

/// Compact subvarieties of M_g: covering constructions below, g - 2 above.
Bounds mg_bounds(Int g);

struct AgIndBounds {
    Int lower = 0;
    Int upper = 0;
    std::optional<Int> exact;
};

AgIndBounds agind_bounds(Int g);

/// dmc(A_g) through the recursion equals dmax(g) for 1 <= g <= g_max.
VerificationReport verify_theorem_b(Int g_max);

/// Boundary recursion equals floor(3g/2) - 2 and the interior hypothesis
/// holds, for 4 <= g <= g_max (2 and 3 are base cases).
VerificationReport verify_cor_c(Int g_max);

/// (k-1) hss_dim <= dmax(k rep_dim) over the catalog, equality only for
/// type I with k = 2.
VerificationReport verify_cor_decoupled(Int rep_max, Int k_max);

/// Superadditivity of dmax for g1 + g2 <= g_max, with the equality set
/// {(1, g2) : g2 >= 16 even}.
VerificationReport verify_lemma_dmax(Int g_max, unsigned jobs = 1);

} // namespace dmcag::moduli

#endif // DMCAG_MODULI_HPP
