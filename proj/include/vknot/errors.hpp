#pragma once

// Exception hierarchy shared by the whole library.  The CLI maps these to
// distinct exit codes, so every throw site picks its class deliberately:
//   validation_error   -- malformed input data (parse errors, invalid codes)
//   precondition_error -- well-formed input outside an operation's domain
//   internal_error     -- one of our own postconditions or invariants failed

#include <stdexcept>
#include <string>

namespace vknot {

struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace vknot
