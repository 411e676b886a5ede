// Copyright 2026 The Isotone Authors. All Rights Reserved.
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

#ifndef ISOTONE_SRC_PARALLEL_H_
#define ISOTONE_SRC_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace isotone::internal {

// Worker count: ISOTONE_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t WorkerCount();

// Runs fn(i) for i in [0, n) over static contiguous chunks. Each index is
// visited exactly once, so writes to per-index slots are deterministic.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace isotone::internal

#endif  // ISOTONE_SRC_PARALLEL_H_
