// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cmix Authors

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "cmix/error.hpp"
#include "cmix/language_tag.hpp"

namespace cmix {

struct Token {
  std::string surface;
  LanguageTag tag;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::size_t index = 0;
  std::vector<Token> tokens;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

/// A tagged corpus. `tag_registry` lists the accepted language codes in the
/// order used for reporting.
struct Corpus {
  std::string name;
  std::vector<Sentence> sentences;
  std::vector<std::string> tag_registry;

  std::size_t token_count() const {
    std::size_t n = 0;
    for (const auto& s : sentences) n += s.tokens.size();
    return n;
  }

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Throws Error when a structural invariant of `c` does not hold.
inline void validate(const Corpus& c) {
  for (std::size_t i = 0; i < c.sentences.size(); ++i) {
    const auto& s = c.sentences[i];
    if (s.index != i)
      throw Error("sentence indices are not contiguous at position " +
                  std::to_string(i));
    if (s.tokens.empty())
      throw Error("sentence " + std::to_string(i) + " has no tokens");
    for (const auto& t : s.tokens) {
      if (t.surface.empty())
        throw Error("sentence " + std::to_string(i) + " has an empty surface");
      if (t.surface.find_first_of("\t\n\r") != std::string::npos)
        throw Error("sentence " + std::to_string(i) +
                    " has a surface containing tab or newline");
      if (t.tag.is_language() &&
          std::find(c.tag_registry.begin(), c.tag_registry.end(),
                    t.tag.code()) == c.tag_registry.end())
        throw Error("sentence " + std::to_string(i) + " uses unregistered code " +
                    t.tag.code());
    }
  }
}

}  // namespace cmix
