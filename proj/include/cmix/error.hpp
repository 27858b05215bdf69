// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cmix Authors

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmix {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that has no meaningful metric value (empty sentence, empty corpus).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Raw tag not present in the language registry nor in the undefined aliases.
class UnknownTagError : public Error {
 public:
  explicit UnknownTagError(std::string tag)
      : Error("unknown language tag '" + tag + "'"), tag_(std::move(tag)) {}

  const std::string& tag() const noexcept { return tag_; }

 private:
  std::string tag_;
};

/// Malformed corpus input. `line()` is 1-based; `token()` is the 1-based token
/// position within the line for the inline format, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string detail, std::size_t token = 0)
      : Error(compose(line, detail, token)),
        line_(line),
        token_(token),
        detail_(std::move(detail)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t token() const noexcept { return token_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string compose(std::size_t line, const std::string& detail,
                             std::size_t token) {
    std::string msg = "line " + std::to_string(line);
    if (token != 0) msg += ", token " + std::to_string(token);
    return msg + ": " + detail;
  }

  std::size_t line_;
  std::size_t token_;
  std::string detail_;
};

}  // namespace cmix
