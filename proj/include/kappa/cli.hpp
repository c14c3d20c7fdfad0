#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace kappa::cli {

/// Runs the command line `args` (without the program name). Returns the exit
/// code: 0 on success, 1 on domain errors or failed verification, 2 on usage
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// --cache-dir if given, else $KAPPA_CACHE_DIR, else $XDG_CACHE_HOME/kappa,
/// else ~/.cache/kappa.
std::filesystem::path resolve_cache_dir(const std::string& flag);

}  // namespace kappa::cli
