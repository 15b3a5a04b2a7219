#pragma once

#include <iosfwd>

namespace schurpoly::cli {

// Exit codes: 0 success/holds, 1 internal error, 2 usage error, 3 scan found
// failing rows, 4 certify verdict undecided.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schurpoly::cli
