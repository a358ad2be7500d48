#pragma once

namespace orm {

// Runs one subcommand.  Exit codes: 0 success, 1 bad input or internal
// failure, 2 finished but with an undecided or uncertified outcome.
int dispatch(int argc, const char* const* argv);

}  // namespace orm
