// Copyright 2026 The mmnav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MMNAV_TOOLS_CLI_HPP
#define MMNAV_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mmnav/vec.hpp"

namespace mmnav::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 1,
  kNoPath = 2,
  kMissionFailed = 3,
  kVerificationFailed = 4,
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "x,y,z;x,y,z" (z may be omitted). Throws ConfigError.
std::vector<Vec3> parse_points(const std::string& text);

}  // namespace mmnav::cli

#endif  // MMNAV_TOOLS_CLI_HPP
