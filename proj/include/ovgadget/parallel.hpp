// Copyright 2026 The ovgadget Authors
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

#ifndef OVGADGET_PARALLEL_HPP_
#define OVGADGET_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace ovgadget {

// Worker count from OVGADGET_THREADS, else hardware concurrency (>= 1).
unsigned worker_count();

// Splits [0, count) into contiguous chunks, one per worker, and calls
// body(worker, begin, end) for each. Callers write results by index so the
// outcome does not depend on the worker count.
void parallel_for(std::size_t count,
                  const std::function<void(unsigned, std::size_t, std::size_t)>& body);

}  // namespace ovgadget

#endif  // OVGADGET_PARALLEL_HPP_
