// Copyright 2026 The plcat Authors.
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

#ifndef PLCAT_TOOLS_CLI_HPP_
#define PLCAT_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace plcat::cli {

// Exit codes.
inline constexpr int kOk          = 0;
inline constexpr int kLawFailed   = 1;
inline constexpr int kBadInput    = 2;
inline constexpr int kUnsupported = 3;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plcat::cli

#endif  // PLCAT_TOOLS_CLI_HPP_
