/*
   Copyright 2026 the maxkernel authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Verification campaigns: each target replays one of the toolkit's
// characterizations against an independent computation over a parameter grid,
// exhaustively when the budget allows and on seeded samples otherwise.

#ifndef MAXKERNEL_VERIFY_HPP
#define MAXKERNEL_VERIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "field.hpp"

namespace mk {

struct VerifyConfig {
    int d = 3;
    std::uint64_t budget = 1ull << 26;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

struct VerifyReport {
    std::string target;
    bool pass = true;
    bool exhaustive = true;
    std::uint64_t instances = 0;
    std::vector<std::string> counterexamples;  // each with enough data to reproduce
    std::string repro;                         // the exact command line that reruns this
    nlohmann::json to_json(const Field& f, const VerifyConfig& cfg) const;
    std::string to_text() const;
};

/// Valid target ids, in display order.
const std::vector<std::string>& verify_targets();

/// Err::UnknownTarget for unlisted ids; Err::BudgetExceeded where a target is
/// exhaustive-only and the grid does not fit.
VerifyReport run_verify(const Field& f, const std::string& target, const VerifyConfig& cfg);

}  // namespace mk

#endif
