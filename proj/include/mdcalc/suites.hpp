#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mdcalc/io.hpp"

namespace mdcalc {

struct SuiteConfig {
  int trials = 100;
  std::uint64_t seed = 1;
  int vars = 1;
  int max_deg = 2;
  int floor = -8;
  std::uint64_t budget = 1'000'000;
};

struct SuiteInfo {
  std::string_view name;
  std::string_view invariant;  // e.g. "M1"
  std::string_view summary;
};

/// Every registered suite, one per invariant.
const std::vector<SuiteInfo>& suites();

struct SuiteReport {
  std::string suite;
  int trials = 0;
  std::uint64_t seed = 0;
  int skipped = 0;
  io::Json failures = io::Json::array();  // ordered by trial index

  bool ok() const { return failures.empty(); }
  io::Json to_json() const;
};

/// Runs `cfg.trials` independent trials, trial t seeded with
/// derive_seed(cfg.seed, t), across worker_count() threads. The report does
/// not depend on the worker count. Throws UnknownSuite.
SuiteReport run_suite(std::string_view name, const SuiteConfig& cfg);

}  // namespace mdcalc
