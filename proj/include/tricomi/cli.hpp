#ifndef TRICOMI_CLI_HPP
#define TRICOMI_CLI_HPP

#include <iosfwd>

namespace tricomi {

// Exit codes: 0 success, 2 singular locus, 64 usage, 73 output I/O failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tricomi

#endif
