// Copyright 2026 The majlab Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace majlab {

/// Bad input from the caller: out-of-range indices, malformed programs,
/// parameters outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical condition the simulation cannot recover from.
class NumericalFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A requested (or forced) measurement outcome has zero Born weight.
class ImpossibleOutcome : public NumericalFailure {
   public:
    using NumericalFailure::NumericalFailure;
};

/// State has support outside the logical (constraint) subspace.
class LeakageError : public NumericalFailure {
   public:
    using NumericalFailure::NumericalFailure;
};

namespace detail {

inline void require(bool cond, const std::string &msg) {
    if (!cond) {
        throw InvalidArgument(msg);
    }
}

}  // namespace detail

}  // namespace majlab
