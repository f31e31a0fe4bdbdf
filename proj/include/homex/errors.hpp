#pragma once

#include <stdexcept>
#include <string>

namespace homex {

// Malformed input: bad graph spec, parse failure, precondition violation.
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string & what) : std::runtime_error(what) {}
};

// A documented resource cap was exceeded (vertex cap, enumeration cap, ...).
// Callers may fall back to a slower route or report exit code 65.
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string & what) : std::runtime_error(what) {}
};

}
