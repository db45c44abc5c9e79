#include <cstdio>
#include <cstring>

#include "criteria.hpp"

using namespace indec;

int main(int argc, char** argv) {
  Exec exec = Exec::Parallel;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--serial") == 0) exec = Exec::Serial;
  int failed = 0;
  for (const auto& r : criteria::run_all(exec)) {
    std::printf("[%s] %2d %s: %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(),
                r.seconds);
    std::fflush(stdout);
    failed += !r.pass;
  }
  return failed == 0 ? 0 : 1;
}
