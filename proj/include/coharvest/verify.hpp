// Copyright 2026 the coharvest developers
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

#ifndef COHARVEST_VERIFY_HPP
#define COHARVEST_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace coharvest::verify {

/// One oracle cross-check: the measured discrepancy against its tolerance.
struct CheckResult {
    std::string module;
    std::string name;
    bool passed = false;
    double discrepancy = 0.0; // worst measured deviation
    double tolerance = 0.0;
    std::string detail;       // where the worst case occurred, notes
};

struct VerifyOptions {
    /// Restrict to checks whose module matches (empty: run everything).
    std::string only_module;
    /// Tighten or loosen every tolerance by this factor (1 = as shipped).
    double tolerance_scale = 1.0;
};

/// Runs the registered cross-checks (closed form vs quadrature grids,
/// Doppler equivalences, Fock-oracle exactness, special-function
/// recurrences, ...).  Checks that throw are reported as failures, never
/// skipped.
std::vector<CheckResult> run_checks(const VerifyOptions& options = {});

/// Names of modules with registered checks (for --only validation).
std::vector<std::string> known_modules();

/// Prints one pass/fail line per check; returns true when all passed.
bool print_report(const std::vector<CheckResult>& results, std::ostream& os);

} // namespace coharvest::verify

#endif
