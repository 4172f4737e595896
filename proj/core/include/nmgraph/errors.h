// Copyright 2026 The nmgraph Authors
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

#ifndef NMGRAPH_ERRORS_H_
#define NMGRAPH_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nmgraph {

// Malformed edge-list or matrix text. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " +
                                           what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A matrix that cannot be the neighbourhood matrix of any simple graph.
class InvalidMatrixError : public std::runtime_error {
 public:
  explicit InvalidMatrixError(const std::string& what)
      : std::runtime_error("not a valid NM: " + what) {}
};

// Two routes to the same quantity disagreed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nmgraph

#endif  // NMGRAPH_ERRORS_H_
