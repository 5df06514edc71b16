#pragma once

/**
 * @file cli.hpp
 * @brief The `quiddity` command line, callable in-process.
 *
 * Commands: check, irr, enumerate, ell, family, criteria, sl2-order.
 * Every command prints a result object {command, status, payload, provenance}
 * as JSON, or plain lines with --format tsv.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace quiddity::cli {

enum ExitCode : int {
  kOk = 0,
  kNo = 1,           // check: not a quiddity; irr: reducible
  kRefused = 2,      // infinite ring where a finite one is needed, or over budget
  kExcluded = 3,     // irr: size <= 2
  kUsage = 64,       // parse errors and bad arguments
  kNotQuiddity = 65, // irr on a tuple that is not a quiddity
  kInternal = 70,
};

/// @p args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quiddity::cli
