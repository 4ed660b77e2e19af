#pragma once

#include <iosfwd>

namespace degseq::cli {

enum ExitCode : int {
  kOk = 0,
  kBadArguments = 1,
  kOverBudget = 2,
  kMissingPrior = 3,
  kVerifyMismatch = 4,
};

// Environment variable naming the default series cache; --cache overrides it.
inline constexpr const char *kCacheEnv = "DEGSEQ_CACHE";

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace degseq::cli
