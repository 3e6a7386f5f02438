#include <cstdio>

#include "qmu/suite.hpp"

int main(int argc, char** argv) {
  qmu::SuiteOptions opt;
  opt.level = qmu::SuiteLevel::kFull;
  for (int i = 1; i < argc; ++i) opt.witness_files.emplace_back(argv[i]);
  qmu::SuiteReport report = qmu::run_suite(opt);
  std::fputs(qmu::format_report(report).c_str(), stdout);
  return report.passed() ? 0 : 1;
}
