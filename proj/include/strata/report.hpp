#pragma once

#include <exception>
#include <string>
#include <vector>

#include "json.hpp"
#include "strata/problem.hpp"
#include "strata/stratum.hpp"

namespace strata {

using Json = nlohmann::ordered_json;

/// Exit codes of the command line tool.
enum ExitCode : int {
  kOk = 0,
  kParseFailure = 1,
  kSemanticFailure = 2,
  kNotReliable = 3,
  kEmptyStratum = 4,
  kMismatch = 5,
  kIoFailure = 6,
};

struct RunResult {
  GenericBasis basis;
  StratumReport report;
  double millis = 0;
};

RunResult run_problem(const ProblemSpec& spec);

/// Parameter names c1 ... cN.
std::vector<std::string> parameter_names(std::size_t count);

/// {params, rank, ed, dim, smooth, generators, levels, millis}.
Json report_json(const RunResult& result);

/// Human readable form of the same report.
std::string report_text(const RunResult& result, const std::vector<std::string>& vars);

/// Exit code for an exception escaping a run.
int exit_code_for(const std::exception& e);
/// {"error": kind, "message": text}.
Json error_json(const std::exception& e);

/// Parses and runs problem text, returning the report or the error document.
Json run_text(const std::string& text);

}  // namespace strata
