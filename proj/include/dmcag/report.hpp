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

#ifndef DMCAG_REPORT_HPP
#define DMCAG_REPORT_HPP

#include <string>
#include <vector>

#include "dmcag/arith.hpp"
#include "json.hpp"

namespace dmcag {

/// Outcome of an exhaustive check over a finite range.  A falsified claim is
/// a report with status fail and at least one counterexample, not an error.
struct VerificationReport {
    std::string claim;
    nlohmann::ordered_json range = nlohmann::ordered_json::object();
    std::vector<nlohmann::ordered_json> counterexamples;
    std::vector<nlohmann::ordered_json> witnesses;
    // Cases where a non-strict inequality is attained with equality.
    std::vector<nlohmann::ordered_json> equality_cases;
    std::vector<std::string> notes;
    Int checked = 0;

    bool passed() const { return counterexamples.empty(); }

    nlohmann::ordered_json to_json() const;
};

} // namespace dmcag

#endif // DMCAG_REPORT_HPP
