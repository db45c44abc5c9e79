#pragma once

namespace indec {

enum class Exec { Serial, Parallel };

// Worker count for the OpenMP kernels. Defaults to INDEC_THREADS when set,
// otherwise to the OpenMP runtime default.
int thread_count();
void set_thread_count(int n);

}  // namespace indec
