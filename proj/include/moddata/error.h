// Copyright 2026 The moddata Authors
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

#ifndef MODDATA_ERROR_H_
#define MODDATA_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace moddata {

enum class ErrorCode {
  kDivisionByZero,
  kBadConductor,
  kNotAUnit,
  kBadModulus,
  kInvalidDatum,
  kDimensionMismatch,
  kNotIntegral,
  kNoUniqueMatch,
  kNotRootOfUnity,
  kNotGalois,
  kBadInversePair,
  kEvenExponent,
  kSignMismatch,
  kChargeNotRootOfUnity,
  kInvalidExtension,
  kChargeOrderTooLarge,
  kTooLarge,
  kNonInvertibleInput,
  kEvenOrder,
  kSchemaError,
  kInternal,
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kBadConductor: return "BadConductor";
    case ErrorCode::kNotAUnit: return "NotAUnit";
    case ErrorCode::kBadModulus: return "BadModulus";
    case ErrorCode::kInvalidDatum: return "InvalidDatum";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotIntegral: return "NotIntegral";
    case ErrorCode::kNoUniqueMatch: return "NoUniqueMatch";
    case ErrorCode::kNotRootOfUnity: return "NotRootOfUnity";
    case ErrorCode::kNotGalois: return "NotGalois";
    case ErrorCode::kBadInversePair: return "BadInversePair";
    case ErrorCode::kEvenExponent: return "EvenExponent";
    case ErrorCode::kSignMismatch: return "SignMismatch";
    case ErrorCode::kChargeNotRootOfUnity: return "ChargeNotRootOfUnity";
    case ErrorCode::kInvalidExtension: return "InvalidExtension";
    case ErrorCode::kChargeOrderTooLarge: return "ChargeOrderTooLarge";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNonInvertibleInput: return "NonInvertibleInput";
    case ErrorCode::kEvenOrder: return "EvenOrder";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

// All library failures are reported through this exception; callers switch
// on code() rather than on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace moddata

#endif  // MODDATA_ERROR_H_
