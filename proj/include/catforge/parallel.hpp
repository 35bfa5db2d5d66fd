#pragma once

#include <cstddef>
#include <cstdint>

namespace catforge {

// Every heavy sweep in the workbench exists twice: a plain serial loop that
// serves as the reference implementation, and an OpenMP kernel. Both must
// produce identical, canonically ordered results; the test suite compares
// them and tools/catbench times them against each other.
enum class ExecMode { serial, parallel };

// Process-wide default, initialised from CATFORGE_SERIAL (any non-empty value
// forces serial). Falls back to serial when built without OpenMP.
ExecMode default_exec_mode();
void set_default_exec_mode(ExecMode mode);

// Number of worker threads an omp kernel will use under the current runtime.
int worker_count();

// Global size cap used by search-style operations. CATFORGE_CAP overrides the
// built-in default; the CLI --cap flag overrides both.
uint64_t default_cap();
void set_default_cap(uint64_t cap);

inline constexpr uint64_t kBuiltinCap = 20'000'000;

}  // namespace catforge
