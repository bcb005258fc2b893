#include "tangles/parallel.hpp"
#include "tangles/error.hpp"

#include <atomic>

namespace tangles {

namespace {
std::atomic<int> g_jobs{1};
}

int jobs() noexcept { return g_jobs.load(std::memory_order_relaxed); }

void set_jobs(int n) noexcept { g_jobs.store(n < 1 ? 1 : n, std::memory_order_relaxed); }

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::input: return "input error";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::resource: return "resource error";
    case ErrorKind::integrity: return "integrity error";
    case ErrorKind::unsupported: return "unsupported operation";
  }
  return "error";
}

}  // namespace tangles
