#ifndef CIRCHAD_ERROR_HPP
#define CIRCHAD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace circhad {

enum class ErrorKind {
  argument,   // a precondition on an input value failed
  size,       // a configured size cap was exceeded
  parse,      // malformed serialized input
  io,         // file could not be read or written
  tolerance,  // an internal numerical cross-check failed
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace circhad

#endif
