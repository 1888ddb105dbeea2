// Copyright 2026 The guframe Authors.
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
#ifndef GUFRAME_TOOLS_CLI_H_
#define GUFRAME_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace guframe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;

// Runs one command. args excludes the program name. Results and error
// objects are written to out as JSON; "-" as an input path reads from in.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out);

}  // namespace guframe::cli

#endif  // GUFRAME_TOOLS_CLI_H_
