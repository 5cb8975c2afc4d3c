#pragma once

#include <stdexcept>
#include <string>

namespace supersplit {

/// Error taxonomy shared by the whole library. The CLI maps kinds to exit
/// codes, so new failure sites should pick the matching kind rather than
/// throwing raw std exceptions.
class Error : public std::runtime_error {
public:
  enum class Kind {
    Universe,  // operands over different generator universes
    Degree,    // degree/weight precondition violated
    Schema,    // malformed input data (files, size guards)
    Axiom,     // algebraic axiom failure detected in data
    State,     // operation called in the wrong stage/state
    Io,        // file system problems
    Usage,     // unknown names, bad command lines
    Internal,  // broken internal invariant (indicates a bug)
  };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

[[noreturn]] inline void fail(Error::Kind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace supersplit
