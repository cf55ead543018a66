/*
   Copyright 2026 The wstack Authors

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

#include "wstack/error.hpp"

namespace wstack {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NOT_PRIME";
        case ErrorCode::BoundExceeded: return "BOUND_EXCEEDED";
        case ErrorCode::ZeroDivision: return "ZERO_DIVISION";
        case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
        case ErrorCode::DegreeMismatch: return "DEGREE_MISMATCH";
        case ErrorCode::ZeroForm: return "ZERO_FORM";
        case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
        case ErrorCode::UnsupportedCharacteristic: return "UNSUPPORTED_CHARACTERISTIC";
        case ErrorCode::DiscriminantZero: return "DISCRIMINANT_ZERO";
        case ErrorCode::NonFibration: return "NON_FIBRATION";
        case ErrorCode::IdentityMap: return "IDENTITY_MAP";
        case ErrorCode::WildRamification: return "WILD_RAMIFICATION";
        case ErrorCode::NotMorphism: return "NOT_MORPHISM";
        case ErrorCode::Pole: return "POLE";
        case ErrorCode::Inconsistent: return "INCONSISTENT";
        case ErrorCode::Unsupported: return "UNSUPPORTED";
        case ErrorCode::Parse: return "PARSE";
        case ErrorCode::Io: return "IO";
    }
    return "UNKNOWN";
}

}  // namespace wstack
