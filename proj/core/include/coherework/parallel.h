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

#ifndef COHEREWORK_PARALLEL_H
#define COHEREWORK_PARALLEL_H

#include <cstddef>

namespace coherework {

/// Worker count for internal parallel loops: COHEREWORK_THREADS if set to a
/// positive integer, otherwise hardware_concurrency (at least 1).
std::size_t configured_thread_count();

}  // namespace coherework

#endif
