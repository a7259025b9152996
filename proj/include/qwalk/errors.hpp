// Copyright 2026 The qwalk authors
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

namespace qwalk {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Bad inputs: out-of-range parameters, violated preconditions,
// malformed configuration. Maps to CLI exit code 2.
class validation_error : public error {
 public:
  explicit validation_error(const std::string& what) : error(what) {}
};

// A numerical routine failed to meet its own accuracy contract
// (non-convergence, consistency residue above threshold, root collision).
// Maps to CLI exit code 3.
class numeric_error : public error {
 public:
  explicit numeric_error(const std::string& what) : error(what) {}
};

// A request exceeds a configured resource cap. Maps to CLI exit code 4.
class resource_error : public error {
 public:
  explicit resource_error(const std::string& what) : error(what) {}
};

}  // namespace qwalk
