#ifndef EXCHLIST_ERROR_HPP
#define EXCHLIST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace exchlist {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid parameters or option combinations (caller bug or bad flags).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Malformed or inconsistent input data (files, matrices, labels).
class DataError : public Error {
 public:
  explicit DataError(const std::string& msg) : Error(msg) {}
};

}  // namespace exchlist

#endif
