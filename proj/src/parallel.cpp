#include "zlab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>

namespace zlab::parallel {
namespace {

std::atomic<int> g_jobs{0};

int hardware_jobs() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace

int jobs() {
  const int j = g_jobs.load(std::memory_order_relaxed);
  return j > 0 ? j : hardware_jobs();
}

void set_jobs(int n) { g_jobs.store(std::max(0, n), std::memory_order_relaxed); }

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body) {
  if (n == 0) return;
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }

  std::mutex err_mu;
  std::size_t err_index = std::numeric_limits<std::size_t>::max();
  std::exception_ptr err;

  auto run_chunk = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
        return;
      }
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back(run_chunk, lo, hi);
  }
  run_chunk(0, std::min(n, chunk));
  for (auto& t : threads) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace zlab::parallel
