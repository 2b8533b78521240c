// Copyright 2026 The dqc1-correlations Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Experiment runner: one subcommand per reproducible result, emitting CSV or
 * JSON. Exit codes: 0 success, 1 usage/config error, 2 a checked property
 * failed numerically, 3 I/O error.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dqc1::cli {

inline constexpr const char *kToolName = "dqc1_cli";
inline constexpr const char *kToolVersion = "1.0.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitFalsified = 2,
    kExitIo = 3,
};

/// args excludes the program name. Results go to `out` unless --out is set.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace dqc1::cli
