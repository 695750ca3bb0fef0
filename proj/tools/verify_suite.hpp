#pragma once

#include "serialize.hpp"

#include "todadual/rootsys.hpp"

#include <cstdint>

namespace todadual::cli {

struct SuiteConfig {
  AlgebraType algebra;
  std::uint64_t seed;
  int points;
};

/// Runs every property check for one algebra and returns the JSON report.
/// report["all_pass"] is the overall verdict.
json run_verify_suite(const SuiteConfig& config);

}  // namespace todadual::cli
