// Command line front end. Lives in the library so tests can drive every
// subcommand in process and assert on exit codes and output bytes.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spansub {

// Exit codes partition failure causes so scripts can tell the pipeline
// stages apart.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal = 1;
inline constexpr int parse = 2;           // malformed input file
inline constexpr int witness = 3;         // bandwidth witness violated
inline constexpr int condition = 4;       // degree condition failed
inline constexpr int assembly = 5;        // growth or assembly failed
inline constexpr int verification = 6;    // verifier rejected an object
inline constexpr int too_large = 7;       // exhaustive-search cap exceeded
inline constexpr int params = 8;          // bad parameters or usage
inline constexpr int counterexample = 9;  // hunt found a counterexample
} // namespace exit_code

// Runs one invocation; args excludes the program name. All regular output
// goes to `out`, diagnostics to `err`; nothing is read from stdin.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace spansub
