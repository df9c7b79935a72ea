#pragma once

// Command-line front end: `classes`, `identities`, `verify`.

#include "ppart/rootsys.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace ppart::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_verification_failed = 1,
  exit_usage = 2,
  exit_data_missing = 3,
  exit_invalid_data = 4,
};

/// Highest rank accepted per family. Exceptional families are not capped.
using RankCaps = std::map<Family, int>;

RankCaps default_rank_caps();

/// Expands tokens such as {"A", "1..8", "C", "2", "G2", "GL3"} into specs.
/// A family letter (or "GL") must be followed by a rank or an inclusive
/// range "lo..hi". Throws ConfigError.
std::vector<GroupSpec> parse_group_tokens(const std::vector<std::string>& tokens, const RankCaps& caps);

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ppart::cli
