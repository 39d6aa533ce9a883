// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <cstdio>
#include <string>

#include "freepi/verify.hpp"

int main(int argc, char** argv) {
  freepi::VerifyOptions options;
  options.golden_dir = GOLDEN_DIR;
  int failed = 0;
  for (const auto& name : freepi::suite_names()) {
    if (argc > 1 && name != argv[1]) continue;
    const freepi::SuiteResult r = freepi::run_suite(name, options);
    std::printf("%s\n", freepi::format_result(r).c_str());
    std::fflush(stdout);
    failed += !r.passed();
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
