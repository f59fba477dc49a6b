#pragma once

#include <stdexcept>
#include <string>

namespace gengraph {

// Bad user input: malformed permutation strings, degree mismatches.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An element that does not belong to the named group (wrong degree or
// parity); kept separate so the CLI can report it with its own exit code.
class membership_error : public input_error {
public:
  explicit membership_error(const std::string& what) : input_error(what) {}
};

// A computation was refused because it exceeds a configured cap.
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

class io_error : public std::runtime_error {
public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gengraph
