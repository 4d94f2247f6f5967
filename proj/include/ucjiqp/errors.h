// Copyright 2026 The ucjiqp Authors
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

#ifndef UCJIQP_ERRORS_H
#define UCJIQP_ERRORS_H

#include <stdexcept>
#include <string>

namespace ucjiqp {

/// Malformed or out-of-contract input: bad indices, schema violations,
/// non-finite angles, mismatched widths.
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Requested state or dense operator does not fit the configured budget.
class CapacityError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Probability mass or amplitude was found outside the pair-coded subspace.
class LeakageError : public std::runtime_error {
   public:
    LeakageError(const std::string &what, double leakage)
        : std::runtime_error(what), leakage_(leakage) {
    }
    double leakage() const {
        return leakage_;
    }

   private:
    double leakage_;
};

}  // namespace ucjiqp

#endif
