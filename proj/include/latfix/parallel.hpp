#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace latfix {

enum class Execution { Serial, Parallel };

/// results[i] = trial(i) for i < count. The parallel variant distributes
/// trials over OpenMP threads; results stay indexed by trial, and the first
/// exception by trial index is rethrown after all trials finish.
template <typename Result, typename Trial>
std::vector<Result> run_trials(std::size_t count, Trial&& trial, Execution execution) {
  std::vector<Result> results(count);
  if (execution == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) results[i] = trial(i);
    return results;
  }
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      results[idx] = trial(idx);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace latfix
