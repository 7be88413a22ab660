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

#ifndef DMCAG_PAIRS_HPP
#define DMCAG_PAIRS_HPP

// Dominating (dimension, genus) pairs of compact special subvarieties coming
// from a single simple factor, and the superadditive closure over products.
//
// Families:
//   A1               (1, 2)
//   I    (k, n)      ((k-1) F(n), k n)           k >= 2, n >= 3
//   II   (k, r)      ((k-1) r(r-1)/2, 2 r k)     k >= 2, r >= 4
//   III  (k, r)      ((k-1) r(r+1)/2, 2 r k)     k >= 2, r >= 2
//   Iflat r=1 (s, δ) (s F(δ), s δ^2)             s >= 1, δ >= 2
//   Iflat r=2 (s, δ) (s F(2δ), 2 s δ^2)          s >= 1, δ >= 2
// Only A1 and I contribute to the maximum; the others are dominated and kept
// for the domination reports.

#include <string>
#include <vector>

#include "dmcag/arith.hpp"
#include "dmcag/report.hpp"

namespace dmcag::pairs {

enum class FamilyKind { A1, I, II, III, IflatR1, IflatR2 };

struct Family {
    FamilyKind kind = FamilyKind::A1;
    Int first = 0;   // k for I/II/III, s for Iflat
    Int second = 0;  // n for I, r for II/III, δ for Iflat

    static Family a1() { return {FamilyKind::A1, 0, 0}; }
    static Family unitary(Int k, Int n) { return {FamilyKind::I, k, n}; }
    static Family so_star(Int k, Int r) { return {FamilyKind::II, k, r}; }
    static Family sp(Int k, Int r) { return {FamilyKind::III, k, r}; }
    static Family flat_r1(Int s, Int delta) { return {FamilyKind::IflatR1, s, delta}; }
    static Family flat_r2(Int s, Int delta) { return {FamilyKind::IflatR2, s, delta}; }

    friend bool operator==(const Family&, const Family&) = default;
    friend auto operator<=>(const Family&, const Family&) = default;
};

/// Tag such as "A1", "I_k=3_n=5", "II_k=2_r=5", "Iflat_r1_s=1_delta=2".
std::string name(const Family& f);

/// True for A1 and I, the families that can attain the maximum.
bool contributes_to_maximum(FamilyKind kind);

/// The pair of a family member.  Throws std::domain_error on invalid
/// parameters.
Pair family_pair(const Family& f);

/// ((k-1) F(n), k n) for k >= 1, n >= 2.  The I formula without the n >= 3
/// restriction; the Iflat comparisons use n = 2.
Pair unitary_pair(Int k, Int n);

struct TaggedPair {
    Pair pair;
    Family family;

    friend bool operator==(const TaggedPair&, const TaggedPair&) = default;
};

enum class FamilySelection { maximal_only, all };

/// Every family pair with g <= g_max, sorted by (g, d, family).
std::vector<TaggedPair> enumerate_family_pairs(Int g_max,
                                               FamilySelection selection = FamilySelection::all);

struct FrontierEntry {
    Pair pair;
    std::vector<Family> families;
};

/// Pairs not dominated by a different pair of the input; equal pairs from
/// different families are merged into one entry keeping every tag.
std::vector<FrontierEntry> frontier(const std::vector<TaggedPair>& pairs);

/// Largest d over A1 and I pairs of genus exactly g; 0 when there is none.
Int best_indecomposable(Int g);

/// Members of A1 and I with genus g attaining best_indecomposable(g) (empty
/// when the value is 0 from the absence of pairs).
std::vector<Family> best_indecomposable_families(Int g);

/// best_indecomposable and its superadditive closure
///   M(0) = 0,  M(g) = max(best(g), max_{1 <= a < g} M(a) + M(g - a)),
/// tabulated for 0 <= g <= g_max.
class MdspTable {
public:
    explicit MdspTable(Int g_max);

    Int g_max() const { return static_cast<Int>(closure_.size()) - 1; }
    Int best_indecomposable(Int g) const;
    Int mdsp_star(Int g) const;

private:
    void check(Int g) const;

    std::vector<Int> best_;
    std::vector<Int> closure_;
};

Int mdsp_star(Int g);

/// Each Iflat pair with s <= s_max, δ <= delta_max is compared with the
/// witness ((1) F(n), 2n) where n = floor(s δ^2 / 2) (r = 1) or n = s δ^2
/// (r = 2).  Independently, I pairs with k <= k_max, n <= n_max are searched
/// for the best dominating pair; when the witness lies inside that box the two
/// routes must agree.
VerificationReport verify_claim_F(Int s_max, Int delta_max, Int k_max, Int n_max);

/// II (r >= 4) and III (r >= 2) pairs with r <= r_max, k <= k_max are checked
/// against the I pair with the same k and n = 2r - 1 (n = 6 for III, r = 3).
/// When that witness fails, the I pairs with k' <= k_max, n' <= n_max are
/// searched for a strictly dominating one.
VerificationReport verify_remark_domination(Int r_max, Int k_max, Int n_max);

/// best_indecomposable(g) <= dmax(g) for 1 <= g <= g_max, with the set of
/// equality genera reported.  Also checks that no dominated-family pair
/// exceeds dmax at its genus.
VerificationReport verify_prop_estimate(Int g_max);

} // namespace dmcag::pairs

#endif // DMCAG_PAIRS_HPP
