// Copyright 2026 The qwalk authors
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

#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace qwalk {

// 0 means "use the hardware concurrency".
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Static block partition of [0, n). Workers write to disjoint indices, so the
// caller can reduce afterwards in a fixed order; results are then identical
// for every thread count. The first exception thrown by any worker is
// rethrown on the calling thread.
template <class F>
void parallel_for(std::size_t n, int threads, F&& body) {
  int nw = resolve_threads(threads);
  if (nw <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  if (static_cast<std::size_t>(nw) > n) nw = static_cast<int>(n);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(nw));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nw));
  const std::size_t chunk = (n + static_cast<std::size_t>(nw) - 1) / static_cast<std::size_t>(nw);
  for (int w = 0; w < nw; ++w) {
    const std::size_t begin = static_cast<std::size_t>(w) * chunk;
    const std::size_t end = begin + chunk < n ? begin + chunk : n;
    pool.emplace_back([&, w, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace qwalk
