// Copyright 2026 The Authors.
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

#include "lawrence/error.hpp"

namespace lawrence {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyConfig:
      return "EmptyConfig";
    case ErrorCode::kZeroVector:
      return "ZeroVector";
    case ErrorCode::kNotGenerating:
      return "NotGenerating";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kSizeGuard:
      return "SizeGuard";
    case ErrorCode::kRetryExhausted:
      return "RetryExhausted";
    case ErrorCode::kNotSimple:
      return "NotSimple";
    case ErrorCode::kEmptyFlat:
      return "EmptyFlat";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kNegativeDelta:
      return "NegativeDelta";
    case ErrorCode::kPolynomialityViolation:
      return "PolynomialityViolation";
  }
  return "Unknown";
}

}  // namespace lawrence
