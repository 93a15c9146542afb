#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lbpsteg::cli {

// Process exit statuses, also listed in the --help footer.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,          // unknown flag, missing option, bad value
  kIo = 2,             // unreadable input, unwritable or existing output
  kFormat = 3,         // malformed or unsupported PGM
  kCapacity = 4,       // payload does not fit / cover too small
  kCorruptStream = 5,  // extraction failed, usually a wrong --mu
  kInvalid = 6,        // any other rejected input (dimension mismatch, ...)
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace lbpsteg::cli
