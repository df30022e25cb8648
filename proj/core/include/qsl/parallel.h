// Copyright 2026 The qsl Authors
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

#ifndef QSL_PARALLEL_H_
#define QSL_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace qsl {

// Worker count: hardware concurrency, capped by the QSL_THREADS environment
// variable when it holds a positive integer. Always >= 1.
std::size_t worker_count();

// Runs body(i) for i in [0, count). Indices are split into contiguous chunks,
// one per worker; body must only write state owned by its index so results
// do not depend on the thread count.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& body);

}  // namespace qsl

#endif  // QSL_PARALLEL_H_
