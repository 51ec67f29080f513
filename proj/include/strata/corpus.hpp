#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "strata/report.hpp"

namespace strata {

struct CorpusCase {
  std::filesystem::path problem;
  bool passed = false;
  /// Empty on success, otherwise what differed.
  std::string detail;
  Json actual;
};

struct CorpusSummary {
  std::vector<CorpusCase> cases;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> warnings;
};

/// Golden sidecar of a problem file: `name.strata` -> `name.expected.json`.
std::filesystem::path expected_path(const std::filesystem::path& problem);

/// Reports compared with the timing field removed (and error messages,
/// which are free text).
bool same_report(const Json& expected, const Json& actual);

/// Runs every `*.strata` file of the directory (sorted by name) on a pool
/// of `workers` threads (0 = hardware concurrency) and compares with the
/// sidecars. With `bless`, missing sidecars are written instead of failing.
CorpusSummary run_corpus(const std::filesystem::path& dir, std::size_t workers = 0,
                         bool bless = false);

}  // namespace strata
