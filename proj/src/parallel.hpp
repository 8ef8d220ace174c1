/*
   Copyright 2026 The ffkernel authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFK_PARALLEL_HPP
#define FFK_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace ffk {

/// Worker count: FFKERNEL_JOBS when set, otherwise hardware concurrency.
inline int default_jobs() {
  if (const char* env = std::getenv("FFKERNEL_JOBS")) {
    int j = std::atoi(env);
    if (j > 0) return j;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? int(hc) : 1;
}

/// Splits [0, n) into chunks, maps each with `work(lo, hi)` and folds the
/// partial results with `merge` in chunk order; results are independent of
/// the worker count because the arithmetic is exact and merging commutes.
template <class R, class Work, class Merge>
R parallel_reduce(size_t n, int jobs, Work&& work, Merge&& merge) {
  if (jobs < 1) jobs = 1;
  size_t chunks = size_t(jobs);
  if (n < 2 * chunks || jobs == 1) return work(0, n);
  std::vector<R> partial(chunks);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  size_t per = (n + chunks - 1) / chunks;
  for (size_t c = 0; c < chunks; ++c) {
    size_t lo = c * per, hi = std::min(n, lo + per);
    if (lo >= hi) break;
    pool.emplace_back([&, c, lo, hi]() { partial[c] = work(lo, hi); });
  }
  for (auto& t : pool) t.join();
  R out = std::move(partial[0]);
  for (size_t c = 1; c < chunks; ++c) merge(out, std::move(partial[c]));
  return out;
}

}  // namespace ffk

#endif
