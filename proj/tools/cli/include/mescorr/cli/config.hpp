#pragma once

#include <istream>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace mescorr::cli {

/// Flat `key = value` lines; blank lines and lines starting with '#' are
/// skipped. Throws ConfigError on a line without '=' or with an empty key.
std::map<std::string, std::string> parse_config(std::istream& in);

/// Inserts `--key v1 v2 ...` (value split on whitespace) after the subcommand
/// for every config key whose flag is absent from `args`, so explicit flags
/// win. `args[0]` is the subcommand.
std::vector<std::string> merge_config(std::span<const std::string> args,
                                      const std::map<std::string, std::string>& config);

} // namespace mescorr::cli
