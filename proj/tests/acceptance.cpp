// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <cstring>
#include <iostream>

#include "nsenum/verify.hpp"

int main(int argc, char** argv) {
  nsenum::VerifyOptions opts;
  opts.stretch = true;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      opts.stretch = false;
    } else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
      opts.threads = static_cast<unsigned>(std::stoul(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--quick] [--threads N]\n";
      return 2;
    }
  }
  nsenum::Verifier v(opts);
  bool ok = true;
  for (int c = 1; c <= nsenum::Verifier::kCriteria; ++c) {
    const auto r = v.run(c);
    ok = ok && r.passed;
    std::cout << nsenum::format_check(r) << std::endl;
  }
  return ok ? 0 : 1;
}
