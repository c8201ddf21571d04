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

#include "coherework/errors.h"

namespace coherework {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonSquare:
            return "NonSquare";
        case ErrorKind::NonHermitian:
            return "NonHermitian";
        case ErrorKind::NotUnitary:
            return "NotUnitary";
        case ErrorKind::NoConvergence:
            return "NoConvergence";
        case ErrorKind::DimMismatch:
            return "DimMismatch";
        case ErrorKind::InvalidState:
            return "InvalidState";
        case ErrorKind::InvalidHamiltonian:
            return "InvalidHamiltonian";
        case ErrorKind::InvalidProjectors:
            return "InvalidProjectors";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::RankError:
            return "RankError";
        case ErrorKind::EnergyOutOfRange:
            return "EnergyOutOfRange";
        case ErrorKind::ClampRequired:
            return "ClampRequired";
        case ErrorKind::AlphabetTooLarge:
            return "AlphabetTooLarge";
        case ErrorKind::Consistency:
            return "Consistency";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {
}

}  // namespace coherework
