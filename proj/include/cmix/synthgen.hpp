// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cmix Authors

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmix/corpus.hpp"
#include "cmix/language_tag.hpp"

namespace cmix {

/// SplitMix64 (Steele, Lea, Flood). Used to expand a 64-bit seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman, Vigna), state filled from SplitMix64.
/// Satisfies UniformRandomBitGenerator.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed) noexcept {
    SplitMix64 sm(seed);
    for (auto& word : s_) word = sm.next();
  }

  /// Generator with an explicit state; the state must not be all zero.
  static Xoshiro256 from_state(const std::array<std::uint64_t, 4>& state) noexcept {
    Xoshiro256 g(0);
    g.s_ = state;
    return g;
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform integer in [0, bound), rejection-sampled so the stream is
  /// identical on every platform. bound must be > 0.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do {
      x = (*this)();
    } while (x >= limit);
    return x % bound;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_{};
};

enum class Arrangement { Alternating, Blocked, Random };

struct GenSpec {
  std::size_t sentence_count = 1;
  std::size_t min_words = 10;
  std::size_t max_words = 10;
  std::size_t languages = 2;
  Arrangement arrangement = Arrangement::Alternating;
  double undefined_ratio = 0.0;
  std::uint64_t seed = 0;
  /// Language codes; defaults to L1..LN when empty.
  std::vector<std::string> codes;
};

inline std::vector<std::string> synthetic_codes(std::size_t n) {
  std::vector<std::string> codes;
  for (std::size_t i = 1; i <= n; ++i) codes.push_back("L" + std::to_string(i));
  return codes;
}

inline void validate(const GenSpec& spec) {
  if (spec.min_words == 0) throw std::invalid_argument("words per sentence must be >= 1");
  if (spec.min_words > spec.max_words)
    throw std::invalid_argument("minimum words exceeds maximum words");
  if (spec.languages == 0) throw std::invalid_argument("at least one language is required");
  if (spec.languages > spec.min_words)
    throw std::invalid_argument("number of languages (" + std::to_string(spec.languages) +
                                ") exceeds words per sentence (" +
                                std::to_string(spec.min_words) + ")");
  if (!(spec.undefined_ratio >= 0.0 && spec.undefined_ratio < 1.0))
    throw std::invalid_argument("undefined ratio must lie in [0, 1)");
  if (!spec.codes.empty() && spec.codes.size() != spec.languages)
    throw std::invalid_argument("number of codes differs from number of languages");
}

namespace detail {

inline std::vector<LanguageTag> arrange(std::size_t slots, const std::vector<std::string>& codes,
                                        Arrangement arrangement, Xoshiro256& rng) {
  const std::size_t n = codes.size();
  std::vector<LanguageTag> tags;
  tags.reserve(slots);
  const std::size_t block = (slots + n - 1) / n;
  for (std::size_t j = 0; j < slots; ++j) {
    std::size_t lang = 0;
    switch (arrangement) {
      case Arrangement::Alternating: lang = j % n; break;
      case Arrangement::Blocked: lang = j / block; break;
      case Arrangement::Random: lang = static_cast<std::size_t>(rng.below(n)); break;
    }
    tags.push_back(LanguageTag::language(codes[lang]));
  }
  return tags;
}

}  // namespace detail

/// Deterministic synthetic corpus. Each sentence has W tokens (uniform in
/// [min_words, max_words]) of which floor(undefined_ratio * W) are Undefined,
/// placed at evenly spaced positions; the remaining slots follow the
/// arrangement. Surfaces are "w0", "w1", ...
inline Corpus generate(const GenSpec& spec) {
  validate(spec);
  const auto codes = spec.codes.empty() ? synthetic_codes(spec.languages) : spec.codes;
  Xoshiro256 rng(spec.seed);

  Corpus corpus;
  corpus.name = "synthetic-" + std::to_string(spec.seed);
  corpus.tag_registry = codes;
  for (const auto& c : corpus.tag_registry) (void)LanguageTag::language(c);

  for (std::size_t i = 0; i < spec.sentence_count; ++i) {
    std::size_t W = spec.min_words;
    if (spec.max_words > spec.min_words)
      W += static_cast<std::size_t>(rng.below(spec.max_words - spec.min_words + 1));
    const auto u = static_cast<std::size_t>(
        std::floor(spec.undefined_ratio * static_cast<double>(W)));

    std::vector<bool> undefined_at(W, false);
    for (std::size_t k = 0; k < u; ++k)
      undefined_at[static_cast<std::size_t>((static_cast<double>(k) + 0.5) *
                                            static_cast<double>(W) /
                                            static_cast<double>(u))] = true;

    auto language_tags = detail::arrange(W - u, codes, spec.arrangement, rng);
    Sentence s{i, {}};
    s.tokens.reserve(W);
    std::size_t next_language = 0;
    for (std::size_t p = 0; p < W; ++p) {
      auto tag = undefined_at[p] ? LanguageTag::undefined(UndefinedReason::UN)
                                 : language_tags[next_language++];
      s.tokens.push_back({"w" + std::to_string(p), std::move(tag)});
    }
    corpus.sentences.push_back(std::move(s));
  }
  return corpus;
}

inline constexpr std::size_t kMaxEnumerationLength = 8;

/// Calls `visit(const Sentence&)` for every tag sequence of length
/// 1..max_words over `alphabet`, shortest first, lexicographic in alphabet
/// order within a length. Sentence indices count from 0 across the whole
/// enumeration. Throws std::invalid_argument when max_words exceeds
/// kMaxEnumerationLength or the alphabet is empty.
template <class Visitor>
void for_each_small_sentence(std::size_t max_words, const std::vector<LanguageTag>& alphabet,
                             Visitor&& visit) {
  if (max_words > kMaxEnumerationLength)
    throw std::invalid_argument("enumeration length " + std::to_string(max_words) +
                                " exceeds the limit of " +
                                std::to_string(kMaxEnumerationLength));
  if (alphabet.empty()) throw std::invalid_argument("empty alphabet");

  std::size_t index = 0;
  for (std::size_t len = 1; len <= max_words; ++len) {
    std::vector<std::size_t> digits(len, 0);
    while (true) {
      Sentence s{index++, {}};
      s.tokens.reserve(len);
      for (std::size_t p = 0; p < len; ++p)
        s.tokens.push_back({"w" + std::to_string(p), alphabet[digits[p]]});
      visit(static_cast<const Sentence&>(s));

      std::size_t p = len;
      while (p > 0 && ++digits[p - 1] == alphabet.size()) digits[--p] = 0;
      if (p == 0) break;
    }
  }
}

inline std::vector<Sentence> enumerate_small(std::size_t max_words,
                                             const std::vector<LanguageTag>& alphabet) {
  std::vector<Sentence> out;
  for_each_small_sentence(max_words, alphabet,
                          [&](const Sentence& s) { out.push_back(s); });
  return out;
}

}  // namespace cmix
