#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ucbs {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied parameter is out of contract (bad k, empty set, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input data violates a type invariant (non-finite pixels, bad range).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure; message names the offending path.
class IoError : public Error {
 public:
  using Error::Error;
};

// A persisted file does not match its versioned schema.
class FormatError : public Error {
 public:
  FormatError(const std::string& msg, std::int64_t byte_offset = -1)
      : Error(msg), byte_offset_(byte_offset) {}

  // Byte offset of the failure when known, -1 otherwise.
  std::int64_t byte_offset() const { return byte_offset_; }

 private:
  std::int64_t byte_offset_;
};

// Training produced a non-finite loss.
class TrainingDiverged : public Error {
 public:
  TrainingDiverged(const std::string& msg, int epoch)
      : Error(msg), epoch_(epoch) {}

  int epoch() const { return epoch_; }

 private:
  int epoch_;
};

}  // namespace ucbs
