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

#ifndef GIMPL_ERROR_H_
#define GIMPL_ERROR_H_

#include <stdexcept>
#include <string>

namespace gimpl {

// Raised for every contract violation in the library (bad input, violated
// precondition, failed certificate).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gimpl

#endif  // GIMPL_ERROR_H_
