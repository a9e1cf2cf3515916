#pragma once

#include <stdexcept>
#include <string>

namespace crystals {

// Bad arguments or inputs that violate an operation's precondition.
class input_error : public std::invalid_argument {
  public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// The graph at hand is not the regular crystal the caller claimed it to be.
// Core queries raise this instead of assuming regularity, so the verifier can
// turn it into a finding.
class malformed_crystal_error : public std::runtime_error {
  public:
    explicit malformed_crystal_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured size cap was exceeded.
class resource_error : public std::runtime_error {
  public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace crystals
