#include "strata/report.hpp"

#include <chrono>
#include <sstream>

#include "strata/errors.hpp"

namespace strata {

RunResult run_problem(const ProblemSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  RunResult r;
  r.basis = problem_basis(spec);
  r.report = analyze(r.basis, spec.options);
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
  return r;
}

std::vector<std::string> parameter_names(std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t k = 0; k < count; ++k) names.push_back("c" + std::to_string(k + 1));
  return names;
}

Json report_json(const RunResult& result) {
  const StratumReport& rep = result.report;
  const auto names = parameter_names(rep.params);
  Json j;
  j["params"] = rep.params;
  j["rank"] = rep.rank;
  j["ed"] = rep.ed;
  j["dim"] = rep.dim;
  j["smooth"] = rep.smooth;
  j["generators"] = Json::array();
  for (const ParamPoly& g : rep.generators) j["generators"].push_back(g.to_string(names));
  j["levels"] = Json::object();
  for (ParamIndex v : rep.survivors) j["levels"][names[v]] = result.basis.params[v].level;
  j["millis"] = static_cast<std::int64_t>(result.millis + 0.5);
  return j;
}

std::string report_text(const RunResult& result, const std::vector<std::string>& vars) {
  const StratumReport& rep = result.report;
  const auto names = parameter_names(rep.params);
  std::ostringstream out;
  out << "parameters:          " << rep.params << "\n"
      << "linear rank:         " << rep.rank << "\n"
      << "embedding dimension: " << rep.ed << "\n"
      << "Krull dimension:     " << rep.dim << "\n"
      << "smooth:              " << (rep.smooth ? "yes" : "no") << "\n";
  if (rep.smooth) {
    out << "stratum is an affine space of dimension " << rep.ed << "\n";
  } else {
    out << "generators:\n";
    for (const ParamPoly& g : rep.generators) out << "  " << g.to_string(names) << "\n";
  }
  out << "surviving parameters:\n";
  for (ParamIndex v : rep.survivors) {
    const Parameter& p = result.basis.params[v];
    out << "  " << names[v] << "  coefficient of " << p.tail.to_string(vars) << " in F"
        << p.generator + 1 << " (lead " << result.basis.ideal.generators()[p.generator].to_string(vars)
        << "), level [";
    for (std::size_t k = 0; k < p.level.size(); ++k) out << (k ? "," : "") << p.level[k];
    out << "]\n";
  }
  out << "time: " << static_cast<std::int64_t>(result.millis + 0.5) << " ms\n";
  return out.str();
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kParseFailure;
  if (dynamic_cast<const NotReliable*>(&e)) return kNotReliable;
  if (dynamic_cast<const EmptyStratum*>(&e)) return kEmptyStratum;
  return kSemanticFailure;
}

Json error_json(const std::exception& e) {
  static const char* kinds[] = {"", "ParseError", "SemanticError", "NotReliable", "EmptyStratum"};
  Json j;
  j["error"] = kinds[exit_code_for(e)];
  j["message"] = e.what();
  return j;
}

Json run_text(const std::string& text) {
  try {
    return report_json(run_problem(parse_problem(text)));
  } catch (const Error& e) {
    return error_json(e);
  }
}

}  // namespace strata
