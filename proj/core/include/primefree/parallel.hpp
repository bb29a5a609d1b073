#ifndef PRIMEFREE_PARALLEL_HPP
#define PRIMEFREE_PARALLEL_HPP

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace primefree {

inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs per_index(i, out) for i in [begin, end), partitioned into
// contiguous chunks across `workers` threads. Results are concatenated
// in chunk order, so output is identical to the sequential run.
template <class T, class Fn>
std::vector<T> parallel_collect(std::uint64_t begin, std::uint64_t end,
                                unsigned workers, Fn per_index) {
  std::vector<T> out;
  if (begin >= end) return out;
  const std::uint64_t range = end - begin;
  unsigned n = resolve_workers(workers);
  if (std::uint64_t(n) > range) n = static_cast<unsigned>(range);

  if (n <= 1) {
    for (std::uint64_t i = begin; i < end; ++i) per_index(i, out);
    return out;
  }

  std::vector<std::vector<T>> partial(n);
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> threads;
  threads.reserve(n);
  for (unsigned w = 0; w < n; ++w) {
    const std::uint64_t lo = begin + range * w / n;
    const std::uint64_t hi = begin + range * (w + 1) / n;
    threads.emplace_back([&, w, lo, hi] {
      try {
        for (std::uint64_t i = lo; i < hi; ++i) per_index(i, partial[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace primefree

#endif  // PRIMEFREE_PARALLEL_HPP
