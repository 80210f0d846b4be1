#pragma once

namespace apsheat {

// Exit codes: 0 success, 1 verification failure, 2 configuration or usage
// error, 3 mathematical domain error.
int run_cli(int argc, const char* const* argv);

}  // namespace apsheat
