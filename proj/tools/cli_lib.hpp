#ifndef MINORFORGE_CLI_LIB_HPP
#define MINORFORGE_CLI_LIB_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace minorforge::cli {

// FNV-1a 64-bit content hash, rendered as 16 lowercase hex digits. Run
// manifests use it to pin the exact input edge list a report came from.
std::string fnv1a64_hex(const std::string& bytes);

// Command-line entry point, exposed as a function so tests can drive it
// directly. `args` is the argument list without the program name. Commands
// that consume a graph take it from a positional file path, or from `in`
// when the path is absent or "-". Reports go to `out` unless --out names a
// file; diagnostics go to `err`.
//
// Exit codes: 0 = run succeeded and every verification flag passed,
// 1 = run succeeded but a verification flag failed, 2 = usage error,
// unreadable input, or a failed precondition inside the library.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace minorforge::cli

#endif
