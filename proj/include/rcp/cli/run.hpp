#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcp {

// One command-line invocation. Returns the process exit code:
//   0  success / verified,
//   1  usage, input, or I/O error,
//   2  verification counterexample; the offending instance is written to
//      a triage artifact (a motif file whenever a motif is involved).
// Reports go to `out`; in JSON format they carry `schema: 1` plus a
// `generated_at` timestamp and are otherwise byte-deterministic for fixed
// inputs and seed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// argv[0] is the program name and is skipped.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rcp
