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

#ifndef DMCAG_EFFICIENCY_HPP
#define DMCAG_EFFICIENCY_HPP

#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "dmcag/arith.hpp"
#include "dmcag/report.hpp"

namespace dmcag::efficiency {

/// Finite multiset of integers >= 2, stored sorted ascending.
class Multiset {
public:
    Multiset() = default;
    Multiset(std::initializer_list<Int> elements);
    explicit Multiset(std::vector<Int> elements);

    std::span<const Int> elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    Int sum() const;

    std::string to_string() const;

    friend bool operator==(const Multiset&, const Multiset&) = default;
    friend auto operator<=>(const Multiset&, const Multiset&) = default;

private:
    std::vector<Int> elements_;
};

struct ProdSum {
    Int prod = 0;
    Int sum = 0;
};

/// Throws std::domain_error on an empty multiset and std::overflow_error
/// when the product does not fit.
ProdSum prod_sum(const Multiset& n);

/// Membership in the closed list {b}, {2,b}, {3,b} (3 <= b <= 5),
/// {2,2,b} (2 <= b <= 3).
bool is_efficient_closed(const Multiset& n);

/// Prod(N) < 2 Sum(N), evaluated directly.
bool is_efficient_oracle(const Multiset& n);

/// Calls visit for every multiset with elements >= 2 and sum in
/// [1, sum_max], in lexicographic order of the sorted element list.
void for_each_multiset(Int sum_max, const std::function<void(const Multiset&)>& visit);

/// Same, restricted to multisets whose smallest element is first.
void for_each_multiset_with_min(Int sum_max, Int first,
                                const std::function<void(const Multiset&)>& visit);

/// Closed form against oracle on every multiset with sum <= sum_max, and no
/// efficient multiset with 14 < sum <= sum_max.  jobs > 1 splits the work by
/// smallest element.
VerificationReport verify_lemma_N(Int sum_max, unsigned jobs = 1);

/// One simple factor of a non-decoupled representation: k real factors, an
/// irreducible summand of dimension dim_u.
struct Summand {
    Int k = 0;
    Int dim_u = 0;
};

struct DecouplingCheck {
    bool genus_ok = false;   // g >= sum k_j dim U_j
    bool chain_ok = false;   // sum dmax(k_j dim U_j) <= dmax(sum) <= dmax(g)
    Int lower_genus = 0;     // sum k_j dim U_j
    Int summed_dmax = 0;     // sum dmax(k_j dim U_j)
    Int dmax_g = 0;
};

/// Arithmetic skeleton of the inefficient / non-decouplable estimates.
DecouplingCheck check_decoupling_bound(std::span<const Summand> summands, Int g);

/// Numeric inequalities behind the non-decoupled case analysis:
///  - for b >= 3, l1 + l2 >= 2, l2 >= 1:  l1 + l2 dmax(b) < dmax(b (l1 + l2));
///  - for r >= 5 with d = l1 + l2 r(r-1)/2, g = 2r(l1 + l2) and d >= g - 1:
///    dmax(g) > d + 1;
///  - the decoupling chain for every summand list with sum k_j dim U_j <= g_max.
VerificationReport verify_non_decoupled(Int b_max, Int l_max, Int g_max);

} // namespace dmcag::efficiency

#endif // DMCAG_EFFICIENCY_HPP
