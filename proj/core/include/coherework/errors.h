// Copyright 2026 The coherework Authors
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

#ifndef COHEREWORK_ERRORS_H
#define COHEREWORK_ERRORS_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace coherework {

/// Failure categories raised by the numerics. The CLI maps every kind to the
/// "physics validation" exit status and prints `error_kind_name(kind)`.
enum class ErrorKind {
    NonSquare,
    NonHermitian,
    NotUnitary,
    NoConvergence,
    DimMismatch,
    InvalidState,
    InvalidHamiltonian,
    InvalidProjectors,
    InvalidArgument,
    RankError,
    EnergyOutOfRange,
    ClampRequired,
    AlphabetTooLarge,
    Consistency,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace coherework

#endif
