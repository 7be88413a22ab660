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

#ifndef DMCAG_ARITH_HPP
#define DMCAG_ARITH_HPP

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>

namespace dmcag {

using Int = std::int64_t;

// Checked machine arithmetic. Every quantity handled by the library is an
// integer; an overflow is reported instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// Floor division for a positive divisor.
Int floor_div(Int a, Int b);

/// Largest e with 2^e <= n, for n >= 1.
Int floor_log2(Int n);

/// A (dimension, genus) pair.  The genus is the dimension of the abelian
/// varieties parameterized by the ambient moduli space; d is the complex
/// dimension of a candidate compact subvariety.
struct Pair {
    Int d = 0;
    Int g = 1;

    friend bool operator==(const Pair&, const Pair&) = default;
    // Lexicographic order for containers; unrelated to domination.
    friend auto operator<=>(const Pair&, const Pair&) = default;
};

std::string to_string(const Pair& p);

/// True iff q is dominated by p: q.d <= p.d and q.g >= p.g.
bool dominates(const Pair& p, const Pair& q);

/// Domination with q.d < p.d in addition.
bool strictly_dominates(const Pair& p, const Pair& q);

/// d < g - 1: beaten by a Hodge-generic subvariety of dimension g - 1.
bool is_negligible(const Pair& p);

/// max(g - 1, floor(floor(g/2)^2 / 4)), defined for g >= 1.
Int dmax(Int g);

/// The three-branch closed form of dmax (g - 1 below 16, floor(g^2/16) for
/// even g, floor((g-1)^2/16) for odd g).  Kept separate so the two
/// expressions can be compared against each other.
Int dmax_piecewise(Int g);

/// F(n) = ceil(n/2) * floor(n/2), for n >= 2.
Int half_product(Int n);

/// g(g-1)/2 - 1, the codimension-g upper bound for g >= 3.
Int keel_sadun_bound(Int g);

enum class ValueKind { exact, lower_bound, upper_bound };

std::string to_string(ValueKind kind);

/// One per-genus value of a tabulated quantity.
struct GenusValue {
    Int g = 1;
    Int value = 0;
    ValueKind kind = ValueKind::exact;

    friend bool operator==(const GenusValue&, const GenusValue&) = default;
};

// Exhaustive-check defaults; the CLI can raise them.
inline constexpr Int kDmaxEquivalenceMax = 1'000'000;
inline constexpr Int kSuperadditivityMax = 4000;
inline constexpr Int kHalfProductBoundMax = 100'000;

} // namespace dmcag

#endif // DMCAG_ARITH_HPP
