// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cmix Authors

#pragma once

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cmix {

/// Why a token carries no language.
enum class UndefinedReason { NE, X, MIX, UN, OTHER };

inline std::string_view to_string(UndefinedReason r) noexcept {
  switch (r) {
    case UndefinedReason::NE: return "NE";
    case UndefinedReason::X: return "X";
    case UndefinedReason::MIX: return "MIX";
    case UndefinedReason::UN: return "UN";
    case UndefinedReason::OTHER: return "OTHER";
  }
  return "UN";
}

inline std::string to_upper_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::toupper(c));
  });
  return out;
}

/// Language assignment of a single token: either a language code or Undefined
/// (named entity, symbol, intra-word mix, universal tag).
///
/// Equality ignores the undefined reason: all Undefined tags are the same
/// class as far as every metric is concerned.
class LanguageTag {
 public:
  enum class Kind { Language, Undefined };

  /// `code` is upper-cased; it must be non-empty.
  static LanguageTag language(std::string_view code) {
    if (code.empty()) throw std::invalid_argument("empty language code");
    return LanguageTag(Kind::Language, to_upper_ascii(code), UndefinedReason::UN);
  }

  static LanguageTag undefined(UndefinedReason reason = UndefinedReason::UN) {
    return LanguageTag(Kind::Undefined, {}, reason);
  }

  Kind kind() const noexcept { return kind_; }
  bool is_language() const noexcept { return kind_ == Kind::Language; }
  bool is_undefined() const noexcept { return kind_ == Kind::Undefined; }

  /// Empty for Undefined tags.
  const std::string& code() const noexcept { return code_; }
  UndefinedReason undefined_reason() const noexcept { return reason_; }

  /// Text written back to corpus files. OTHER has no raw spelling and is
  /// written as the universal tag.
  std::string label() const {
    if (is_language()) return code_;
    if (reason_ == UndefinedReason::OTHER) return "UN";
    return std::string(to_string(reason_));
  }

  friend bool operator==(const LanguageTag& a, const LanguageTag& b) noexcept {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ == Kind::Undefined || a.code_ == b.code_;
  }

  friend std::ostream& operator<<(std::ostream& os, const LanguageTag& t) {
    if (t.is_language()) return os << t.code_;
    return os << "Undefined(" << to_string(t.reason_) << ")";
  }

 private:
  LanguageTag(Kind k, std::string code, UndefinedReason r)
      : kind_(k), code_(std::move(code)), reason_(r) {}

  Kind kind_;
  std::string code_;
  UndefinedReason reason_;
};

}  // namespace cmix
