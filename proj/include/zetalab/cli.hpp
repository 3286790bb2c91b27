#pragma once
// Batch front end: subcommand dispatch, flat key=value configuration files,
// report emission (aligned text to stdout, JSON to --out), and zero-catalog
// cache management rooted at ZETALAB_CACHE_DIR.

#include <string>
#include <vector>

namespace zetalab::cli {

// Parse argv and run one subcommand.  Returns 0 on pass/success, 1 on a
// check failure or a computation-time error, 2 on a usage error.
int dispatch(int argc, const char* const* argv);

// Convenience overload for tests.
int dispatch(const std::vector<std::string>& args);

// Flat key = value file ('#' starts a comment, blank lines skipped) turned
// into "--key" "value" token pairs.  Exposed for the config unit tests.
std::vector<std::string> config_tokens(const std::string& path);

// Resolve a cache file path: relative names are rooted at ZETALAB_CACHE_DIR
// when that variable is set; absolute and ./-qualified paths pass through.
std::string resolve_cache_path(const std::string& path);

}  // namespace zetalab::cli
