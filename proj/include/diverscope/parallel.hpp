/* Copyright 2026 The Diverscope Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef DIVERSCOPE_PARALLEL_HPP_
#define DIVERSCOPE_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace diverscope {

/// Worker count: DIVERSCOPE_THREADS when set to a positive integer,
/// otherwise std::thread::hardware_concurrency() (at least 1).
int DefaultThreadCount();

/// Runs body(i) for i in [0, count) on up to `threads` workers (<= 0 means
/// DefaultThreadCount()). Each index is visited exactly once; the first
/// exception thrown by any body is rethrown on the calling thread after all
/// workers have stopped.
void ParallelFor(std::size_t count, int threads,
                 const std::function<void(std::size_t)>& body);

}  // namespace diverscope

#endif  // DIVERSCOPE_PARALLEL_HPP_
