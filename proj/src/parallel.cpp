#include "catforge/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catforge {

namespace {

ExecMode initial_mode() {
#ifdef _OPENMP
  const char* env = std::getenv("CATFORGE_SERIAL");
  if (env != nullptr && *env != '\0') return ExecMode::serial;
  return ExecMode::parallel;
#else
  return ExecMode::serial;
#endif
}

uint64_t initial_cap() {
  const char* env = std::getenv("CATFORGE_CAP");
  if (env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<uint64_t>(v);
  }
  return kBuiltinCap;
}

std::atomic<ExecMode> g_mode{initial_mode()};
std::atomic<uint64_t> g_cap{initial_cap()};

}  // namespace

ExecMode default_exec_mode() { return g_mode.load(std::memory_order_relaxed); }

void set_default_exec_mode(ExecMode mode) {
#ifndef _OPENMP
  mode = ExecMode::serial;
#endif
  g_mode.store(mode, std::memory_order_relaxed);
}

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

uint64_t default_cap() { return g_cap.load(std::memory_order_relaxed); }

void set_default_cap(uint64_t cap) { g_cap.store(cap == 0 ? kBuiltinCap : cap, std::memory_order_relaxed); }

}  // namespace catforge
