#include "strata/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "strata/errors.hpp"

namespace strata {
namespace fs = std::filesystem;

namespace {

Json comparable(Json j) {
  if (j.is_object()) {
    j.erase("millis");
    j.erase("message");
  }
  return j;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

CorpusCase run_case(const fs::path& problem, bool bless) {
  CorpusCase c;
  c.problem = problem;
  try {
    c.actual = run_text(read_file(problem));
  } catch (const std::exception& e) {
    c.detail = e.what();
    return c;
  }
  const fs::path golden = expected_path(problem);
  if (!fs::exists(golden)) {
    if (bless) {
      Json j = comparable(c.actual);
      std::ofstream(golden) << j.dump(2) << "\n";
      c.passed = true;
      c.detail = "wrote " + golden.filename().string();
    } else {
      c.detail = "missing " + golden.filename().string();
    }
    return c;
  }
  Json expected;
  try {
    expected = Json::parse(read_file(golden));
  } catch (const std::exception& e) {
    c.detail = golden.filename().string() + ": " + e.what();
    return c;
  }
  c.passed = same_report(expected, c.actual);
  if (!c.passed) {
    c.detail = "expected " + comparable(expected).dump() + " got " + comparable(c.actual).dump();
  }
  return c;
}

}  // namespace

fs::path expected_path(const fs::path& problem) {
  fs::path p = problem;
  return p.replace_extension(".expected.json");
}

bool same_report(const Json& expected, const Json& actual) {
  return comparable(expected) == comparable(actual);
}

CorpusSummary run_corpus(const fs::path& dir, std::size_t workers, bool bless) {
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir.string());
  std::vector<fs::path> problems;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".strata") {
      problems.push_back(entry.path());
    }
  }
  std::sort(problems.begin(), problems.end());

  CorpusSummary summary;
  if (problems.empty()) {
    summary.warnings.push_back("no problem files in " + dir.string());
    return summary;
  }
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, problems.size());

  summary.cases.resize(problems.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.push_back(std::async(std::launch::async, [&] {
      for (std::size_t k; (k = next++) < problems.size();) {
        summary.cases[k] = run_case(problems[k], bless);
      }
    }));
  }
  for (auto& f : pool) f.get();
  for (const CorpusCase& c : summary.cases) (c.passed ? summary.passed : summary.failed)++;
  return summary;
}

}  // namespace strata
