#pragma once

#include <stdexcept>
#include <string>

namespace pbc {

/// Invalid argument to a library operation.
struct ParamError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input data (bit files, CSV, ...) failed validation.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A compression backend failed (external process exit, missing tool, ...).
struct BackendError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A compressed stream cannot be decoded back to plaintext.
struct DecodeError : std::runtime_error {
  DecodeError(const std::string& what, size_t byte_offset)
      : std::runtime_error(what + " (at byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
  size_t offset;
};

/// Transition-stream grammar violation (malformed stream, unknown symbol).
struct EncodingIntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A numeric procedure failed to converge.
struct NumericError : std::runtime_error {
  NumericError(const std::string& what, long iters)
      : std::runtime_error(what + " (after " + std::to_string(iters) + " iterations)"),
        iterations(iters) {}
  long iterations;
};

/// Bad key or value in a sweep config file.
struct ConfigError : std::runtime_error {
  ConfigError(const std::string& what, const std::string& key_name)
      : std::runtime_error(what + " (key: " + key_name + ")"), key(key_name) {}
  std::string key;
};

}  // namespace pbc
