#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "strata/corpus.hpp"
#include "strata/errors.hpp"
#include "strata/problem.hpp"
#include "strata/report.hpp"
#include "strata/segments.hpp"

using namespace strata;

namespace {

int analyze_file(const std::string& path, bool pretty, bool no_level_opt, bool all_pairs) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "strata: cannot read " << path << "\n";
    return kIoFailure;
  }
  std::ostringstream text;
  text << in.rdbuf();
  try {
    ProblemSpec spec = parse_problem(text.str());
    if (no_level_opt) spec.options.level_by_level = false;
    if (all_pairs) spec.options.all_pairs = true;
    const RunResult r = run_problem(spec);
    if (pretty) {
      std::cout << report_text(r, spec.vars);
    } else {
      std::cout << report_json(r).dump() << "\n";
    }
    return kOk;
  } catch (const Error& e) {
    std::cerr << "strata: " << path << ": " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int segment(const std::string& family, const std::vector<std::int64_t>& args,
            const std::string& order, const std::string& mode, bool analyze_it, bool pretty) {
  try {
    if (args.size() < 2) throw SemanticError("expected <n> followed by segment data");
    const auto n = static_cast<std::size_t>(args[0]);
    ProblemSpec spec;
    spec.segment = SegmentSpec{family == "lex" ? SegmentKind::Lex : SegmentKind::RevLex,
                               {args.begin() + 1, args.end()}};
    spec.vars = family == "lex" ? lex_segment_variables(n) : revlex_segment_variables(n);
    spec.order = order.empty() ? family : order;
    if (mode == "general") {
      spec.mode = TailMode::General;
    } else if (mode == "homogeneous") {
      spec.mode = TailMode::Homogeneous;
    } else {
      throw SemanticError("mode must be general or homogeneous");
    }
    if (family == "revlex" && spec.segment->values.size() != 1) {
      throw SemanticError("revlex takes <n> <mu>");
    }

    Json j;
    j["family"] = family;
    j["problem"] = render_problem(spec);
    const MonomialIdeal ideal = problem_ideal(spec);
    j["ideal"] = Json::array();
    for (const Monomial& g : ideal.generators()) j["ideal"].push_back(g.to_string(spec.vars));
    if (family == "lex") {
      j["formula"] = lex_dimension_formula(LexSegmentSpec{n, spec.segment->values});
    } else {
      const std::int64_t mu = spec.segment->values.front();
      const RevLexParams p = revlex_params(mu);
      j["r"] = p.r;
      j["t"] = p.t;
      j["formula"] = revlex_dimension_formula(n, mu);
    }
    if (analyze_it) {
      const RunResult r = run_problem(spec);
      if (pretty) {
        std::cout << "ideal:";
        for (const auto& g : j["ideal"]) std::cout << " " << g.get<std::string>();
        std::cout << "\nformula: " << j["formula"] << "\n" << report_text(r, spec.vars);
        return kOk;
      }
      j["report"] = report_json(r);
    }
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
    return kOk;
  } catch (const Error& e) {
    std::cerr << "strata: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int corpus(const std::string& dir, std::size_t workers, bool bless) {
  try {
    const CorpusSummary s = run_corpus(dir, workers, bless);
    for (const std::string& w : s.warnings) std::cerr << "warning: " << w << "\n";
    for (const CorpusCase& c : s.cases) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.problem.filename().string();
      if (!c.detail.empty()) std::cout << "  " << c.detail;
      std::cout << "\n";
    }
    std::cout << s.passed << " passed, " << s.failed << " failed\n";
    return s.failed == 0 ? kOk : kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "strata: " << e.what() << "\n";
    return kIoFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner strata of monomial ideals"};
  app.require_subcommand(1);

  auto* an = app.add_subcommand("analyze", "Compute the stratum of a problem file");
  std::string file;
  bool pretty = false, no_level_opt = false, all_pairs = false;
  an->add_option("file", file, "Problem file")->required();
  an->add_flag("--pretty", pretty, "Human readable output");
  an->add_flag("--no-level-opt", no_level_opt, "Disable the level specialization");
  an->add_flag("--oracle-all-pairs", all_pairs, "Reduce every S-pair");

  auto* seg = app.add_subcommand("segment", "Segment ideal families");
  std::string family;
  std::vector<std::int64_t> seg_args;
  std::string order, mode = "homogeneous";
  bool no_analyze = false, seg_pretty = false;
  seg->add_option("family", family, "lex or revlex")
      ->required()
      ->check(CLI::IsMember({"lex", "revlex"}));
  seg->add_option("args", seg_args, "lex: <n> <a_q> ... <a_1>; revlex: <n> <mu>")->required();
  seg->add_option("--order", order, "Term order (default: the family's own)");
  seg->add_option("--mode", mode, "general or homogeneous")->capture_default_str();
  seg->add_flag("--no-analyze", no_analyze, "Only print the ideal and the formula");
  seg->add_flag("--pretty", seg_pretty, "Human readable output");

  auto* cor = app.add_subcommand("corpus", "Run a directory of problems against goldens");
  std::string dir;
  std::size_t workers = 0;
  bool bless = false;
  cor->add_option("dir", dir, "Corpus directory")->required();
  cor->add_option("-j,--jobs", workers, "Worker threads (0 = all cores)");
  cor->add_flag("--bless", bless, "Write missing golden files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseFailure;
  }

  if (*an) return analyze_file(file, pretty, no_level_opt, all_pairs);
  if (*seg) return segment(family, seg_args, order, mode, !no_analyze, seg_pretty);
  return corpus(dir, workers, bless);
}
