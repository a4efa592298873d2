#pragma once

#include <cstdint>
#include <vector>

#include "spshrink/report.hpp"

namespace spshrink {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t workers = 1;
};

inline constexpr int kCriterionCount = 11;

/// Criterion `id` in 1..10, each a self-contained property check with its
/// tolerance fixed in the implementation. Errors are captured in the result.
CheckResult run_criterion(int id, const SuiteOptions& options);

/// Criteria 1..10, then the determinism criterion: a second pass of 1..10
/// must reproduce every defect to 12 significant digits.
std::vector<CheckResult> run_acceptance_suite(const SuiteOptions& options);

/// |a − b| ≤ 1e-12·max(|a|, |b|), or both non-finite and equal.
bool same_to_12_digits(double a, double b);

}  // namespace spshrink
