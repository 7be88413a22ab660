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

#include "dmcag/report.hpp"

namespace dmcag {

nlohmann::ordered_json VerificationReport::to_json() const
{
    nlohmann::ordered_json j;
    j["claim"] = claim;
    j["range"] = range;
    j["status"] = passed() ? "pass" : "fail";
    j["checked"] = checked;
    j["counterexamples"] = counterexamples;
    j["witnesses"] = witnesses;
    j["equality_cases"] = equality_cases;
    j["notes"] = notes;
    return j;
}

} // namespace dmcag
