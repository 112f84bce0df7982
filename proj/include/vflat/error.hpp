// Copyright 2026 The vflat Authors
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

#ifndef VFLAT_ERROR_HPP_
#define VFLAT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace vflat {

enum class ErrorKind {
  kInvalidInput,     // malformed document or argument
  kValidation,       // instance violates a modelling assumption
  kOutOfBox,         // lattice point outside the right-hand-side box
  kNotRetained,      // requested level was discarded by the retention mode
  kOverflow,         // 64-bit cell count or value overflow
  kPrecondition,     // operation called outside its stated precondition
  kCapExceeded,      // enumeration oracle refused to run
  kCannotCertify,    // a "for all optima" claim met a truncated enumeration
  kClaimViolation,   // a proven identity did not hold: implementation bug
  kUnknownCheck,
  kInternal,
};

inline std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid input";
    case ErrorKind::kValidation: return "validation failure";
    case ErrorKind::kOutOfBox: return "outside box";
    case ErrorKind::kNotRetained: return "k not retained";
    case ErrorKind::kOverflow: return "overflow";
    case ErrorKind::kPrecondition: return "precondition violated";
    case ErrorKind::kCapExceeded: return "cap exceeded";
    case ErrorKind::kCannotCertify: return "cannot certify";
    case ErrorKind::kClaimViolation: return "claim violated";
    case ErrorKind::kUnknownCheck: return "unknown check";
    case ErrorKind::kInternal: return "internal error";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Thrown when a stated identity fails on concrete data. Carries the
// offending lattice point / solution rendered as text.
class ClaimViolation : public Error {
 public:
  ClaimViolation(const std::string& claim, const std::string& witness)
      : Error(ErrorKind::kClaimViolation, claim + " violated at " + witness),
        witness_(witness) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace vflat

#endif  // VFLAT_ERROR_HPP_
