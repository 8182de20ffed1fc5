#pragma once

#include <stdexcept>
#include <string>

namespace kd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed input file; line is 1-based, 0 when not line-specific
struct ParseError : Error {
    ParseError(std::string msg, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg), line(line_no) {}
    int line;
};

struct RoutingError : Error {
    using Error::Error;
};

struct CompileError : Error {
    using Error::Error;
};

}  // namespace kd
