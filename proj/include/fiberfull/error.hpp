#pragma once

#include <stdexcept>
#include <string>

namespace ffl {

// Bad user input: syntax errors, unknown names, precondition violations.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A postcondition the engine guarantees did not hold.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

[[noreturn]] inline void fail_input(const std::string& msg) { throw InputError(msg); }

inline void ensure(bool cond, const char* msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace ffl
