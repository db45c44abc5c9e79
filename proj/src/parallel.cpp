#include "indec/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <string>

namespace indec {

namespace {

int from_env() {
  if (const char* s = std::getenv("INDEC_THREADS")) {
    try {
      const int n = std::stoi(s);
      if (n > 0) return n;
    } catch (...) {
    }
  }
  return omp_get_max_threads();
}

std::atomic<int>& configured() {
  static std::atomic<int> n{from_env()};
  return n;
}

}  // namespace

int thread_count() { return configured().load(); }

void set_thread_count(int n) { configured().store(n > 0 ? n : from_env()); }

}  // namespace indec
