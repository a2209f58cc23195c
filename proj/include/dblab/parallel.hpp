#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace dblab {

/// Worker count from DBLAB_THREADS (read on every call), clamped to [1, 64].
/// Unset or malformed values mean 1.
std::size_t thread_count();

/// Runs body(i) for i in [0, n). Each index is processed exactly once and
/// results must be written to per-index slots, so callers reduce in index
/// order and the outcome does not depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace dblab
