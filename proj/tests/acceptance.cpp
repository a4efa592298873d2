#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "spshrink/parallel.hpp"
#include "spshrink/suite.hpp"

int main(int argc, char** argv) {
  spshrink::SuiteOptions options;
  options.workers = spshrink::default_workers();
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);

  const auto start = std::chrono::steady_clock::now();
  const auto results = spshrink::run_acceptance_suite(options);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  int failures = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    std::printf("criterion %2zu %-28s %s", i + 1, r.check.c_str(), r.pass ? "PASS" : "FAIL");
    std::string sep = "  ";
    for (const auto& [key, value] : r.defects) {
      std::printf("%s%s=%.3e", sep.c_str(), key.c_str(), value);
      sep = " ";
    }
    if (!r.error.empty()) std::printf("  error=%s", r.error.c_str());
    std::printf("\n");
    if (!r.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(results.size()) - failures, results.size(),
              elapsed);
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
