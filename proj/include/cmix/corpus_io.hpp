// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cmix Authors

#pragma once

// Readers and writers for the two tagged-corpus text formats.
//
// COLUMN: one "surface<TAB>tag" per line, a blank line closes a sentence.
// INLINE: one sentence per line, space-separated "surface/tag" tokens; the
//         last '/' of a token separates surface from tag.
//
// Both accept LF or CRLF line endings. Surfaces are opaque UTF-8.

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cmix/corpus.hpp"
#include "cmix/error.hpp"
#include "cmix/language_tag.hpp"

namespace cmix {

enum class UnknownTagAction { Error, TreatUndefined };

enum class CorpusFormat { Column, Inline };

/// Bengali, English, Gujarati, Hindi, Kannada, Malayalam, Marathi, Tamil,
/// Telugu.
inline std::vector<std::string> default_language_codes() {
  return {"EN", "BN", "GU", "HI", "KA", "ML", "MR", "TA", "TE"};
}

struct TagPolicy {
  std::vector<std::string> language_codes = default_language_codes();
  std::map<std::string, UndefinedReason> undefined_aliases = {
      {"UN", UndefinedReason::UN},   {"NE", UndefinedReason::NE},
      {"X", UndefinedReason::X},     {"MIX", UndefinedReason::MIX},
      {"UNIV", UndefinedReason::UN},
  };
  UnknownTagAction unknown_tag_action = UnknownTagAction::Error;

  /// Policy accepting exactly `codes` with the default undefined aliases.
  static TagPolicy with_languages(std::vector<std::string> codes) {
    TagPolicy p;
    p.language_codes = std::move(codes);
    return p;
  }
};

/// Upper-cases every code and alias; throws std::invalid_argument on empty
/// entries or when a code is also an undefined alias.
inline TagPolicy normalized(TagPolicy p) {
  for (auto& c : p.language_codes) {
    if (c.empty()) throw std::invalid_argument("empty language code in policy");
    c = to_upper_ascii(c);
  }
  std::map<std::string, UndefinedReason> aliases;
  for (const auto& [raw, reason] : p.undefined_aliases) {
    if (raw.empty()) throw std::invalid_argument("empty undefined alias in policy");
    aliases.emplace(to_upper_ascii(raw), reason);
  }
  p.undefined_aliases = std::move(aliases);
  for (const auto& c : p.language_codes)
    if (p.undefined_aliases.contains(c))
      throw std::invalid_argument("tag '" + c +
                                  "' is both a language code and an undefined alias");
  return p;
}

/// Case-insensitive lookup of `raw` in `policy`. Unknown tags raise
/// UnknownTagError under UnknownTagAction::Error and map to
/// Undefined(OTHER) otherwise.
inline LanguageTag normalize_tag(std::string_view raw, const TagPolicy& policy) {
  if (raw.empty()) throw std::invalid_argument("empty tag");
  const std::string up = to_upper_ascii(raw);
  for (const auto& code : policy.language_codes)
    if (to_upper_ascii(code) == up) return LanguageTag::language(up);
  for (const auto& [alias, reason] : policy.undefined_aliases)
    if (to_upper_ascii(alias) == up) return LanguageTag::undefined(reason);
  if (policy.unknown_tag_action == UnknownTagAction::TreatUndefined)
    return LanguageTag::undefined(UndefinedReason::OTHER);
  throw UnknownTagError(std::string(raw));
}

/// Non-fatal findings of a parse.
struct ParseWarnings {
  std::size_t skipped_empty_sentences = 0;
};

namespace detail {

inline bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

inline LanguageTag tag_at(std::string_view raw, const TagPolicy& policy,
                          std::size_t line, std::size_t token = 0) {
  try {
    return normalize_tag(raw, policy);
  } catch (const UnknownTagError& e) {
    throw ParseError(line, e.what(), token);
  }
}

inline Corpus empty_corpus(std::string name, const TagPolicy& policy) {
  Corpus c;
  c.name = std::move(name);
  c.tag_registry = policy.language_codes;
  return c;
}

}  // namespace detail

inline Corpus parse_column_format(std::istream& in, const TagPolicy& policy_in,
                                  std::string name, ParseWarnings& warnings) {
  const TagPolicy policy = normalized(policy_in);
  Corpus corpus = detail::empty_corpus(std::move(name), policy);
  std::vector<Token> current;
  std::size_t pending_blanks = 0;
  std::size_t lineno = 0;
  std::string line;

  auto flush = [&] {
    if (current.empty()) return;
    corpus.sentences.push_back({corpus.sentences.size(), std::move(current)});
    current.clear();
  };

  while (detail::next_line(in, line)) {
    ++lineno;
    if (line.empty()) {
      if (current.empty())
        ++pending_blanks;
      else
        flush();
      continue;
    }
    // A run of blank lines before a token line is a skipped empty record.
    warnings.skipped_empty_sentences += pending_blanks;
    pending_blanks = 0;

    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(lineno, "expected 2 tab-separated fields, missing tag field");
    if (line.find('\t', tab + 1) != std::string::npos)
      throw ParseError(lineno, "expected 2 tab-separated fields, found more");
    std::string_view view(line);
    const auto surface = view.substr(0, tab);
    const auto raw_tag = view.substr(tab + 1);
    if (surface.empty()) throw ParseError(lineno, "empty surface field");
    if (raw_tag.empty()) throw ParseError(lineno, "empty tag field");
    current.push_back({std::string(surface), detail::tag_at(raw_tag, policy, lineno)});
  }
  flush();
  return corpus;
}

inline Corpus parse_column_format(std::istream& in, const TagPolicy& policy = {},
                                  std::string name = {}) {
  ParseWarnings ignored;
  return parse_column_format(in, policy, std::move(name), ignored);
}

inline Corpus parse_inline_format(std::istream& in, const TagPolicy& policy_in,
                                  std::string name, ParseWarnings& warnings) {
  const TagPolicy policy = normalized(policy_in);
  Corpus corpus = detail::empty_corpus(std::move(name), policy);
  std::size_t pending_blanks = 0;
  std::size_t lineno = 0;
  std::string line;

  while (detail::next_line(in, line)) {
    ++lineno;
    if (line.empty()) {
      ++pending_blanks;
      continue;
    }
    warnings.skipped_empty_sentences += pending_blanks;
    pending_blanks = 0;

    std::vector<Token> tokens;
    std::string_view rest(line);
    std::size_t position = 0;
    while (true) {
      ++position;
      const auto space = rest.find(' ');
      const auto item = rest.substr(0, space);
      if (item.empty()) throw ParseError(lineno, "empty token", position);
      const auto slash = item.rfind('/');
      if (slash == std::string_view::npos)
        throw ParseError(lineno, "token '" + std::string(item) + "' has no '/' separator",
                         position);
      if (slash == 0) throw ParseError(lineno, "empty surface", position);
      if (slash + 1 == item.size()) throw ParseError(lineno, "empty tag", position);
      if (item.find('\t') != std::string_view::npos)
        throw ParseError(lineno, "tab inside token", position);
      tokens.push_back({std::string(item.substr(0, slash)),
                        detail::tag_at(item.substr(slash + 1), policy, lineno, position)});
      if (space == std::string_view::npos) break;
      rest.remove_prefix(space + 1);
    }
    corpus.sentences.push_back({corpus.sentences.size(), std::move(tokens)});
  }
  return corpus;
}

inline Corpus parse_inline_format(std::istream& in, const TagPolicy& policy = {},
                                  std::string name = {}) {
  ParseWarnings ignored;
  return parse_inline_format(in, policy, std::move(name), ignored);
}

inline Corpus parse_corpus(std::istream& in, CorpusFormat format,
                           const TagPolicy& policy, std::string name,
                           ParseWarnings& warnings) {
  return format == CorpusFormat::Column
             ? parse_column_format(in, policy, std::move(name), warnings)
             : parse_inline_format(in, policy, std::move(name), warnings);
}

inline Corpus parse_corpus(std::string_view text, CorpusFormat format,
                           const TagPolicy& policy = {}, std::string name = {}) {
  std::istringstream in{std::string(text)};
  ParseWarnings ignored;
  return parse_corpus(in, format, policy, std::move(name), ignored);
}

/// Writes `corpus` in `format`. The name is not written; neither format
/// carries metadata. INLINE cannot represent surfaces containing a space and
/// rejects them with std::invalid_argument.
inline void write_corpus(std::ostream& out, const Corpus& corpus, CorpusFormat format) {
  for (const auto& s : corpus.sentences) {
    if (format == CorpusFormat::Column) {
      for (const auto& t : s.tokens) out << t.surface << '\t' << t.tag.label() << '\n';
      out << '\n';
      continue;
    }
    bool first = true;
    for (const auto& t : s.tokens) {
      if (t.surface.find(' ') != std::string::npos)
        throw std::invalid_argument("inline format cannot hold surface '" + t.surface +
                                    "'");
      if (!first) out << ' ';
      out << t.surface << '/' << t.tag.label();
      first = false;
    }
    out << '\n';
  }
}

inline std::string write_corpus(const Corpus& corpus, CorpusFormat format) {
  std::ostringstream out;
  write_corpus(out, corpus, format);
  return out.str();
}

}  // namespace cmix
