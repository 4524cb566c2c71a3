#include "floorlab/parallel.hpp"

#include <atomic>
#include <mutex>
#include <cstdlib>
#include <thread>

namespace floorlab {

unsigned default_workers() {
  if (const char* env = std::getenv("FLOORLAB_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

std::vector<std::pair<Int, Int>> split_range(const Int& lo, const Int& hi, unsigned parts) {
  std::vector<std::pair<Int, Int>> out;
  if (lo > hi) return out;
  Int size = hi - lo + 1;
  if (parts < 1) parts = 1;
  if (size < parts) parts = static_cast<unsigned>(size.get_ui());
  Int chunk = size / parts;
  Int extra = size % parts;
  Int start = lo;
  for (unsigned i = 0; i < parts; ++i) {
    Int len = chunk + (Int(i) < extra ? 1 : 0);
    out.emplace_back(start, start + len - 1);
    start += len;
  }
  return out;
}

void parallel_for_index(size_t count, unsigned workers, const std::function<void(size_t)>& fn) {
  if (workers == 0) workers = default_workers();
  if (workers <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(count);  // drain remaining work
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<unsigned>(workers, static_cast<unsigned>(count));
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace floorlab
