/*
   Copyright 2026 the irredpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef IRREDPOLY_ERRORS_HPP
#define IRREDPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irredpoly {

/// Base class for all library errors.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad arguments: malformed text, composite modulus, context mismatch,
/// violated operation preconditions detectable up front.
class InvalidInputError : public Error {
   public:
    explicit InvalidInputError(const std::string& what) : Error(what) {}
};

/// An internal always-on verification failed (factor product mismatch,
/// irreducibility check on an emitted polynomial, trace fixedness, ...).
/// Indicates either a caller-side precondition violation that was only
/// detectable after the fact, or a genuine bug.
class VerificationError : public Error {
   public:
    explicit VerificationError(const std::string& what) : Error(what) {}
};

/// An exhaustive-enumeration oracle was asked to loop over a domain larger
/// than its budget allows.
class BudgetExceededError : public Error {
   public:
    explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

}  // namespace irredpoly

#endif
