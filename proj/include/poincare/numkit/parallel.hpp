#pragma once
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace poincare {

enum class Exec { serial, parallel };

void set_threads(int n);
int thread_count();

// out[i] = f(i) for i < n; OpenMP when exec == parallel.
// Reductions over out are done by the caller in index order, so results do not
// depend on the thread count.
template <class R, class F>
std::vector<R> map_indices(int n, F&& f, Exec exec) {
  std::vector<R> out(n);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) out[i] = f(i);
  } else {
    for (int i = 0; i < n; ++i) out[i] = f(i);
  }
  return out;
}

}  // namespace poincare
