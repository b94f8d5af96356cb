// Copyright 2026 The Coopetition Authors
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

#ifndef COOPETITION_ERRORS_HPP_
#define COOPETITION_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace coopetition {

// A requested solution concept has no value for the given data (degenerate
// problem, empty candidate set, ...). Report assembly records these per
// concept instead of failing the whole run.
class NotSolvable : public std::runtime_error {
 public:
  explicit NotSolvable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coopetition

#endif  // COOPETITION_ERRORS_HPP_
