#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hamcay/verifier.hpp"

// Command line surface.  Exit codes: 0 success / verification pass,
// 2 verified-impossible (parity obstruction, degenerate parameters, search
// exhausted), 3 verification failure or invalid certificate (witness JSON on
// stderr), 4 usage error.  All subcommands are deterministic: identical
// inputs give identical outputs.

namespace hamcay {

struct CliConfig {
  std::int64_t oracle_multiplier = 4;  // oracle window N = mult * period * (k + |l|)
  std::int64_t search_budget = 24;     // max window edges for search
  Mode auto_preference = Mode::DoubleRays;

  /// Overlay key=value lines from a config file (unknown keys rejected).
  void load_file(const std::string& path);
  /// Resolve from HAMCAY_CONFIG if set.
  static CliConfig from_environment();
};

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hamcay
