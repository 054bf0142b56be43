#pragma once

// Data-parallel sweeps over independent sample points.
//
// `map_indices` evaluates fn(0..n-1) either serially or with an OpenMP
// parallel loop. Results land in index order, so the output never depends on
// the schedule or the thread count. The serial path is the reference the
// parallel one is tested against.

#include <cstddef>
#include <exception>
#include <span>
#include <type_traits>
#include <vector>

#include "kstruve/params.hpp"
#include "kstruve/struve.hpp"

namespace kstruve {

enum class Execution { Serial, Parallel };

template <class Fn>
auto map_indices(std::size_t n, Fn&& fn, Execution execution) {
  using Result = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<Result> results(n);
  if (execution == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
    return results;
  }

  // Exceptions cannot cross the parallel region; keep the first one by index.
  std::vector<std::exception_ptr> failures(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      results[idx] = fn(idx);
    } catch (...) {
      failures[idx] = std::current_exception();
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return results;
}

enum class Variant { Struve, Modified, Normalized };

/// Evaluates one function variant at every x. For Modified and Normalized
/// the `c` field of params is ignored.
std::vector<EvalResult> evaluate_grid(Variant variant, const StruveParams& params, std::span<const double> xs,
                                      Execution execution = Execution::Parallel);

/// Sets the OpenMP worker count for subsequent parallel sweeps (0 keeps the
/// runtime default). No-op when built without OpenMP.
void set_sweep_threads(int threads);

}  // namespace kstruve
