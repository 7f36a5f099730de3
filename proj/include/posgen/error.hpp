#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace posgen {

/// Domain error with a stable machine-readable code ("dimension_mismatch",
/// "not_group_element", ...). The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Malformed external input (bad JSON, bad rational string). Exit code 2.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& detail)
      : Error("malformed_input", detail) {}
};

}  // namespace posgen
