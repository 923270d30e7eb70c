#ifndef HLBIP_ERRORS_HPP
#define HLBIP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hlbip {

// Rejected input: bad values, violated preconditions, failed axiom requirements.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A broken internal invariant. Reaching one of these is a bug, not bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace hlbip

#endif
