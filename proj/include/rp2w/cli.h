// Copyright 2026 The rp2widths Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Command-line front end. Every report embeds its run configuration (the
// argument vector included) and the build version, so rerunning with
// config.argv reproduces it byte for byte.

#ifndef RP2W_CLI_H_
#define RP2W_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace rp2w::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command; `args` excludes the program name. Reports go to `out`
// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

const char* version();

}  // namespace rp2w::cli

#endif  // RP2W_CLI_H_
