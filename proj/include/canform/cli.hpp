#ifndef CANFORM_CLI_HPP
#define CANFORM_CLI_HPP

#include <ostream>

namespace canform {

// Exit codes: 0 success, 1 a check failed, 2 bad flags, 3 computation error.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace canform

#endif
