#include <gtest/gtest.h>
#include <omp.h>

#include <stdexcept>

#include "latfix/cyclicity.hpp"
#include "latfix/parallel.hpp"

using namespace latfix;

namespace {

bool same_records(const ProbeSummary& a, const ProbeSummary& b) {
  if (a.records.size() != b.records.size() || a.violations != b.violations) return false;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const ProbeRecord& x = a.records[i];
    const ProbeRecord& y = b.records[i];
    if (x.trial != y.trial || x.dim != y.dim || x.verdict != y.verdict || x.orders.size() != y.orders.size()) {
      return false;
    }
    for (std::size_t k = 0; k < x.orders.size(); ++k) {
      if (x.orders[k].order != y.orders[k].order || x.orders[k].multiplicity != y.orders[k].multiplicity) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST(Parallel, TrialSeedsAreDistinctAndStable) {
  static_assert(trial_seed(1, 0) != trial_seed(1, 1));
  static_assert(trial_seed(1, 0) != trial_seed(2, 0));
  EXPECT_EQ(trial_seed(42, 7), trial_seed(42, 7));
}

TEST(Parallel, SerialAndParallelProbesAgree) {
  omp_set_num_threads(4);
  const ProbeSummary serial = probe_random_contractions(150, 6, 9, Execution::Serial);
  const ProbeSummary parallel = probe_random_contractions(150, 6, 9, Execution::Parallel);
  EXPECT_TRUE(same_records(serial, parallel));
  EXPECT_TRUE(same_records(parallel, probe_random_contractions(150, 6, 9, Execution::Parallel)));
  EXPECT_FALSE(same_records(serial, probe_random_contractions(150, 6, 10, Execution::Serial)));
}

TEST(Parallel, FirstFailingTrialIsRethrown) {
  omp_set_num_threads(4);
  auto trial = [](std::size_t i) -> int {
    if (i == 3 || i == 17) throw std::runtime_error("trial " + std::to_string(i));
    return static_cast<int>(i);
  };
  for (const auto mode : {Execution::Serial, Execution::Parallel}) {
    try {
      run_trials<int>(40, trial, mode);
      FAIL() << "expected an exception";
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "trial 3");
    }
  }
  const auto ok = run_trials<int>(10, [](std::size_t i) { return static_cast<int>(i * i); }, Execution::Parallel);
  for (std::size_t i = 0; i < ok.size(); ++i) EXPECT_EQ(ok[i], static_cast<int>(i * i));
}
