//  Copyright 2026 The latticeforge Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef INCLUDE_LATTICEFORGE_ERRORS_HPP_
#define INCLUDE_LATTICEFORGE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace latticeforge {

/// Base class of all library errors.  Mathematical verdicts (an identity
/// failing, an embedding not existing) are ordinary return values, never
/// exceptions; exceptions signal unusable input or exceeded resource guards.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotAPoset : public Error {
 public:
  using Error::Error;
};

class NotALattice : public Error {
 public:
  NotALattice(const std::string& msg, std::size_t x, std::size_t y)
      : Error(msg), x(x), y(y) {}
  std::size_t x, y;  // lowest-id offending pair
};

class NotJoinIrreducible : public Error {
 public:
  using Error::Error;
};

class NotACongruence : public Error {
 public:
  using Error::Error;
};

class TrivialLattice : public Error {
 public:
  using Error::Error;
};

class BadInterval : public Error {
 public:
  using Error::Error;
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotClopen : public Error {
 public:
  using Error::Error;
};

class NotInFn : public Error {
 public:
  using Error::Error;
};

class NotInTamari : public Error {
 public:
  using Error::Error;
};

class NotABracketFunction : public Error {
 public:
  using Error::Error;
};

class NotSubsemilattice : public Error {
 public:
  using Error::Error;
};

class NotPolarized : public Error {
 public:
  using Error::Error;
};

class NotMeetHom : public Error {
 public:
  using Error::Error;
};

/// Raised when the measure side and the homomorphism side of a duality
/// property disagree; this indicates a bug, not bad data.
class DualityViolated : public Error {
 public:
  using Error::Error;
};

class GeneratorsDontGenerate : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

}  // namespace latticeforge

#endif  // INCLUDE_LATTICEFORGE_ERRORS_HPP_
