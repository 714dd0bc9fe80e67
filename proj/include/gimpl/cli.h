// Copyright 2026 The gimpl Authors
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

#ifndef GIMPL_CLI_H_
#define GIMPL_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace gimpl {

// Exit codes of `run`.
inline constexpr int kExitYes = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNo = 2;

// `args` excludes the program name. Reports go to `out` as JSON,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gimpl

#endif  // GIMPL_CLI_H_
