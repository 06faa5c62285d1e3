// Copyright 2026 The wreathgrowth Authors.
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

#ifndef WREATHGROWTH_ERRORS_H_
#define WREATHGROWTH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace wreathgrowth {

// Bad arguments: wrong domain, malformed input, violated precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Input is well formed but outside what the algorithms can guarantee.
class UnsupportedInput : public DomainError {
 public:
  using DomainError::DomainError;
};

// A user supplied map failed a structural check (e.g. not a homomorphism).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Element budget, depth or level limits exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wreathgrowth

#endif  // WREATHGROWTH_ERRORS_H_
