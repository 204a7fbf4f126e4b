#pragma once

#include <stdexcept>
#include <string>

namespace simsheaf {

/// Thrown for every contract or data violation in the library: invalid
/// vectors, undefined measures, malformed input files.  The message carries
/// the offending label / cell where one is known.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace simsheaf
