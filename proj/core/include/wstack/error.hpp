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

#ifndef WSTACK_ERROR_HPP
#define WSTACK_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace wstack {

enum class ErrorCode {
    NotPrime,
    BoundExceeded,
    ZeroDivision,
    FieldMismatch,
    DegreeMismatch,
    ZeroForm,
    InvalidArgument,
    UnsupportedCharacteristic,
    DiscriminantZero,
    NonFibration,
    IdentityMap,
    WildRamification,
    NotMorphism,
    Pole,
    Inconsistent,
    Unsupported,
    Parse,
    Io,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Single exception type of the library; the code names the violated constraint.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace wstack

#endif  // WSTACK_ERROR_HPP
