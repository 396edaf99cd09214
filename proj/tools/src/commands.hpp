/*
   Copyright 2026 The polya-cert Authors

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

#ifndef POLYA_TOOLS_COMMANDS_HPP
#define POLYA_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace polya::cli {

inline constexpr const char* kToolName = "polya-cert";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "1";

/// Exit-code contract.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

/// One invocation's outcome: the machine-readable record and a text rendering.
struct CommandResult {
    int exit_code = kOk;
    nlohmann::ordered_json record;
    std::string text;
};

struct AnalyzeOptions {
    std::string tol = "1/1000000000";
    std::optional<unsigned> cap;
};

struct VerifyOptions {
    std::string suite = "identity";
    unsigned trials = 100;
    std::uint64_t seed = 20240607;
    int d = 3;
    unsigned m_max = 40;
};

struct SweepOptions {
    int d = 3;
    unsigned m_max = 200;
    unsigned grid = 2000;
};

struct EstimateOptions {
    int d = 5;
    unsigned grid = 2000;
};

CommandResult cmd_analyze(const std::string& poly, const AnalyzeOptions& opts);
CommandResult cmd_minimal_m(const std::string& poly, std::optional<unsigned> cap, const std::string& tol);
CommandResult cmd_verify(const VerifyOptions& opts);
CommandResult cmd_sweep(const SweepOptions& opts);
CommandResult cmd_estimate_cd(const EstimateOptions& opts);

}  // namespace polya::cli

#endif
