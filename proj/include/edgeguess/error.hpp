// Copyright 2026 The edgeguess Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace edgeguess {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (edge lists, labeling JSON, bijection files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structural problem while building a graph (self-loop, duplicate edge).
class GraphError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// The players' vertices do not form an (admissible) edge.
class PlacementError : public Error {
 public:
  using Error::Error;
};

/// Input violates an operation's precondition (e.g. not a tree).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace edgeguess
