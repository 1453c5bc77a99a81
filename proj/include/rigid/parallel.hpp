// Copyright 2026 The Rigid Embeddings Authors
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

#ifndef RIGID_PARALLEL_HPP_
#define RIGID_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rigid {

// Process-wide worker count; 0 means std::thread::hardware_concurrency().
void SetThreadCount(int threads);
int ThreadCount();

namespace internal {
// Set on worker threads; nested loops run serially on the calling worker.
inline thread_local bool in_parallel_region = false;
}  // namespace internal

// Runs fn(i) for i in [0, count) on up to ThreadCount() threads. Work items
// must write to disjoint outputs. The first exception thrown is rethrown.
template <typename Fn>
void ParallelFor(std::size_t count, Fn&& fn) {
  const std::size_t workers =
      internal::in_parallel_region
          ? 1
          : std::min<std::size_t>(count, static_cast<std::size_t>(ThreadCount()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    const bool outer = internal::in_parallel_region;
    internal::in_parallel_region = true;
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
    internal::in_parallel_region = outer;
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace rigid

#endif  // RIGID_PARALLEL_HPP_
