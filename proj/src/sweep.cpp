#include "kstruve/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kstruve {

std::vector<EvalResult> evaluate_grid(Variant variant, const StruveParams& params, std::span<const double> xs,
                                      Execution execution) {
  return map_indices(
      xs.size(),
      [&](std::size_t i) {
        switch (variant) {
          case Variant::Modified:
            return modified_struve(params.nu, params.k, xs[i]);
          case Variant::Normalized:
            return normalized_struve(params.nu, params.k, xs[i]);
          case Variant::Struve:
            break;
        }
        return struve(params, xs[i]);
      },
      execution);
}

void set_sweep_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

}  // namespace kstruve
