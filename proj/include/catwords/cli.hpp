#pragma once

#include <iosfwd>

namespace catwords::cli {

// Exit codes: 0 success, 1 verification mismatch, 2 malformed input,
// 3 unknown or unsuitable pair, 4 enumeration cap violation, 5 other
// failures (I/O, overflow).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catwords::cli
