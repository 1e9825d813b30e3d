#include "su3/parallel.hpp"

#include <cstdlib>
#include <string>

namespace su3 {

namespace {
std::atomic<unsigned> g_threads{0};
}

unsigned thread_count() {
  if (const unsigned n = g_threads.load(); n > 0) return n;
  if (const char* env = std::getenv("SU3_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void set_thread_count(unsigned n) { g_threads.store(n); }

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace su3
