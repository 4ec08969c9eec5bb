#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace bkcheck {

/// Splits [0, count) into contiguous chunks, runs work(begin, end) on up to `jobs`
/// threads and concatenates the per-chunk results in index order, so the output
/// does not depend on the number of workers.
template <typename T, typename F>
std::vector<T> parallel_collect(int count, int jobs, F&& work) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) return work(0, count);
  const int chunks = std::min(count, jobs * 8);
  std::vector<std::vector<T>> parts(static_cast<std::size_t>(chunks));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t)
    threads.emplace_back([&, t]() {
      try {
        for (int c = t; c < chunks; c += jobs) {
          const int begin = static_cast<int>(static_cast<long long>(count) * c / chunks);
          const int end = static_cast<int>(static_cast<long long>(count) * (c + 1) / chunks);
          parts[static_cast<std::size_t>(c)] = work(begin, end);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<T> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

}  // namespace bkcheck
