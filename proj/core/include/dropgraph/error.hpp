#pragma once

#include <stdexcept>
#include <string>

namespace dropgraph {

enum class ErrorKind {
  kParameter,
  kNoRoi,
  kEmptyBoundary,
  kNotOnBoundary,
  kDuplicatePoints,
  kInvalidRoot,
  kNodeMismatch,
  kEmptyInput,
  kUnsupportedCodec,
  kDecode,
  kIo,
  kSpec,
};

const char* to_string(ErrorKind kind);

/// Exception carrying a machine-checkable category alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dropgraph
