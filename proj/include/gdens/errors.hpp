#ifndef GDENS_ERRORS_HPP
#define GDENS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gdens {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator-backed set was queried above its certified horizon.
class HorizonExceeded : public Error {
 public:
  using Error::Error;
};

/// A scan needed more indices than the configured cap allows, so no
/// certificate could be produced.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Window index or sequence index outside the defined range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Malformed values handed to a constructor (unsorted list, empty window, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace gdens

#endif
