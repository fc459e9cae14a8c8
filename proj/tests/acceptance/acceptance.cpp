#include <cstdio>
#include <cstring>

#include "nt/parallel.hpp"
#include "nt/verify.hpp"

// One line per criterion; exit status 1 when any fails.
int main(int argc, char** argv) {
  auto profile = nt::Profile::Full;
  bool tamper = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) profile = nt::Profile::Quick;
    if (std::strcmp(argv[i], "--tamper") == 0) tamper = true;
  }
  std::printf("acceptance profile: %s\n", std::string(nt::to_string(profile)).c_str());
  std::fflush(stdout);
  int failed = 0;
  nt::verify_all(profile, nt::default_jobs(), tamper, [&](const nt::CriterionResult& r) {
    failed += !r.passed();
    std::printf("%s %2d. %-32s %8.3fs (limit %gs)  %s\n", r.passed() ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.limit_seconds, r.detail.c_str());
    std::fflush(stdout);
  });
  std::printf("%s: %d failing\n", failed == 0 ? "ALL PASS" : "FAILURES", failed);
  return failed == 0 ? 0 : 1;
}
