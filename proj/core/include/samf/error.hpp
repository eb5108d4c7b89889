#pragma once

#include <stdexcept>
#include <string>

namespace samf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument or configuration value is outside its documented domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Two images (or maps) that must share a grid do not.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read, decoded or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace samf
