#include <cstdio>
#include <cstdlib>
#include <string>

#include "mdlab/acceptance.hpp"

int main(int argc, char** argv) {
  mdlab::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) options.only.insert(std::atoi(argv[i]));
  int failed = 0;
  mdlab::run_acceptance(options, [&](const mdlab::CriterionResult& r) {
    std::printf("%s\n", mdlab::format_result(r).c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  });
  std::printf("%d criteria failed\n", failed);
  return failed ? 1 : 0;
}
