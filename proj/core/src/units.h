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

#ifndef COHEREWORK_SRC_UNITS_H
#define COHEREWORK_SRC_UNITS_H

#include <numbers>

namespace coherework::internal {

/// Nats per bit. Every bits<->nats conversion in the library goes through this
/// constant; the mutant build corrupts it so the self-test can prove it notices.
#ifdef COHEREWORK_MUTATE_LN2
inline constexpr double kLn2 = 0.7;
#else
inline constexpr double kLn2 = std::numbers::ln2;
#endif

}  // namespace coherework::internal

#endif
