#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace zlab::parallel {

/// Worker count used by every parallel loop. Defaults to the hardware thread count.
int jobs();
void set_jobs(int n);

/// Runs body(i) for i in [0, n) on up to jobs() threads with static contiguous
/// chunks. The first exception by lowest index is rethrown after all workers join.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body);

/// Ordered map: out[i] = fn(i). Assembly order never depends on the worker count.
template <class T, class Fn>
std::vector<T> map_indices(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  for_each_index(n, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace zlab::parallel
