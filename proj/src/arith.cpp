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

#include "dmcag/arith.hpp"

#include <algorithm>

namespace dmcag {

Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

Int floor_div(Int a, Int b)
{
    if (b <= 0)
        throw std::invalid_argument("floor_div: divisor must be positive");
    Int q = a / b;
    if ((a % b) != 0 && a < 0)
        --q;
    return q;
}

Int floor_log2(Int n)
{
    if (n < 1)
        throw std::domain_error("floor_log2: argument must be >= 1");
    Int e = 0;
    while (n > 1) {
        n >>= 1;
        ++e;
    }
    return e;
}

std::string to_string(const Pair& p)
{
    return "(" + std::to_string(p.d) + "," + std::to_string(p.g) + ")";
}

bool dominates(const Pair& p, const Pair& q)
{
    return q.d <= p.d && q.g >= p.g;
}

bool strictly_dominates(const Pair& p, const Pair& q)
{
    return dominates(p, q) && q.d < p.d;
}

bool is_negligible(const Pair& p)
{
    return p.d < p.g - 1;
}

Int dmax(Int g)
{
    if (g < 1)
        throw std::domain_error("dmax: genus must be >= 1, got " + std::to_string(g));
    const Int half = g / 2;
    return std::max<Int>(g - 1, checked_mul(half, half) / 4);
}

Int dmax_piecewise(Int g)
{
    if (g < 1)
        throw std::domain_error("dmax: genus must be >= 1, got " + std::to_string(g));
    if (g < 16)
        return g - 1;
    if (g % 2 == 0)
        return checked_mul(g, g) / 16;
    return checked_mul(g - 1, g - 1) / 16;
}

Int half_product(Int n)
{
    if (n < 2)
        throw std::domain_error("half_product: n must be >= 2, got " + std::to_string(n));
    return checked_mul((n + 1) / 2, n / 2);
}

Int keel_sadun_bound(Int g)
{
    if (g < 3)
        throw std::domain_error("keel_sadun_bound: genus must be >= 3, got " + std::to_string(g));
    return checked_mul(g, g - 1) / 2 - 1;
}

std::string to_string(ValueKind kind)
{
    switch (kind) {
    case ValueKind::exact:
        return "exact";
    case ValueKind::lower_bound:
        return "lower-bound";
    case ValueKind::upper_bound:
        return "upper-bound";
    }
    return "exact";
}

} // namespace dmcag
