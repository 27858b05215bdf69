// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cmix Authors

#pragma once

/**
 * @file metrics.hpp
 * @brief Per-sentence code-mixing indices.
 *
 * Every index is a function of a SentenceCounts summary:
 *
 *   W   total tokens (Undefined tokens included)
 *   u   Undefined tokens
 *   W'  language-bearing tokens, W - u
 *   w_i tokens of language i; N distinct languages; max_w = max w_i
 *   S   language switches between consecutive language-bearing tokens
 *
 *   LF  = W / N                              (0 when N = 0)
 *   SF  = S / (W - 1)                        (0 when W = 1)
 *   MF  = (W' - max_w) / W'                  (0 when W' = 0)
 *   CMI = 100 (1 - max_w / W')               (0 when W' = 0)
 *   CF  = (a MF + b SF) / f(LF)
 *
 * with f(LF) = LF (CF1), 0.25 (LF - 1) / (W - 1) + 1 (CF2) or
 * atan(LF) / pi + 0.75 (CF3).
 *
 * Undefined tokens are transparent when counting switches: [EN, UN, BN]
 * has one switch.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <ranges>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "cmix/corpus.hpp"
#include "cmix/error.hpp"
#include "cmix/language_tag.hpp"

namespace cmix {

struct SentenceCounts {
  std::size_t W = 0;
  std::size_t u = 0;
  std::size_t Wprime = 0;
  std::map<std::string, std::size_t> per_language;
  std::size_t N = 0;
  std::size_t max_w = 0;
  std::size_t S = 0;

  friend bool operator==(const SentenceCounts&, const SentenceCounts&) = default;
};

enum class Dampening { RawLF, Linear, Arctan };

struct MetricConfig {
  double a = 50.0;
  double b = 50.0;
  Dampening dampening = Dampening::Linear;
};

inline void validate(const MetricConfig& c) {
  if (!(c.a >= 0.0) || !(c.b >= 0.0) || !std::isfinite(c.a) ||
      !std::isfinite(c.b))
    throw std::invalid_argument("weights must be finite and non-negative");
  if (!(c.a + c.b > 0.0))
    throw std::invalid_argument("weights must not sum to zero");
}

struct SentenceMetrics {
  double lf = 0.0;
  double sf = 0.0;
  double mf = 0.0;
  double cmi = 0.0;
  double cf1 = 0.0;
  double cf2 = 0.0;
  double cf3 = 0.0;

  friend bool operator==(const SentenceMetrics&, const SentenceMetrics&) = default;
};

template <class R>
concept TagRange = std::ranges::input_range<R> &&
    std::is_convertible_v<std::ranges::range_reference_t<R>, const LanguageTag&>;

/// Counting summary of a tag sequence. Throws DegenerateInputError if empty.
template <TagRange R>
SentenceCounts count_tags(R&& tags) {
  SentenceCounts c;
  const LanguageTag* prev = nullptr;
  for (const LanguageTag& t : tags) {
    ++c.W;
    if (t.is_undefined()) {
      ++c.u;
      continue;
    }
    ++c.per_language[t.code()];
    if (prev != nullptr && prev->code() != t.code()) ++c.S;
    prev = &t;
  }
  if (c.W == 0) throw DegenerateInputError("sentence has no tokens");
  c.Wprime = c.W - c.u;
  c.N = c.per_language.size();
  for (const auto& [code, n] : c.per_language) c.max_w = std::max(c.max_w, n);
  return c;
}

inline SentenceCounts count_sentence(const Sentence& s) {
  return count_tags(s.tokens | std::views::transform(
                                   [](const Token& t) -> const LanguageTag& {
                                     return t.tag;
                                   }));
}

inline double language_factor(const SentenceCounts& c) noexcept {
  if (c.N == 0) return 0.0;
  return static_cast<double>(c.W) / static_cast<double>(c.N);
}

inline double switching_factor(const SentenceCounts& c) noexcept {
  if (c.W <= 1) return 0.0;
  return static_cast<double>(c.S) / static_cast<double>(c.W - 1);
}

inline double mix_factor(const SentenceCounts& c) noexcept {
  if (c.Wprime == 0) return 0.0;
  return static_cast<double>(c.Wprime - c.max_w) / static_cast<double>(c.Wprime);
}

inline double code_mixing_index(const SentenceCounts& c) noexcept {
  if (c.W <= c.u) return 0.0;
  return 100.0 * (1.0 - static_cast<double>(c.max_w) /
                            static_cast<double>(c.Wprime));
}

/// Divisor f(LF). Requires lf >= 1 and W >= 1; Linear also requires W >= 2
/// because its slope is 0.25 / (W - 1). Throws std::domain_error otherwise.
inline double dampening(double lf, std::size_t W, Dampening kind) {
  if (!(lf >= 1.0)) throw std::domain_error("dampening requires LF >= 1");
  if (W == 0) throw std::domain_error("dampening requires W >= 1");
  switch (kind) {
    case Dampening::RawLF:
      return lf;
    case Dampening::Linear:
      if (W < 2)
        throw std::domain_error("linear dampening is undefined for W = 1");
      return 0.25 / static_cast<double>(W - 1) * (lf - 1.0) + 1.0;
    case Dampening::Arctan:
      return std::atan(lf) / std::numbers::pi + 0.75;
  }
  throw std::domain_error("unknown dampening kind");
}

/// (a MF + b SF) / f(LF). Zero when there is no language-bearing token or the
/// numerator vanishes, in which case f is never evaluated.
inline double complexity_factor(const SentenceCounts& c, const MetricConfig& cfg) {
  if (c.N == 0) return 0.0;
  const double numerator = cfg.a * mix_factor(c) + cfg.b * switching_factor(c);
  if (numerator == 0.0) return 0.0;
  return numerator / dampening(language_factor(c), c.W, cfg.dampening);
}

/// All indices of one counting summary. The dampening selector of `cfg` is
/// ignored: cf1, cf2 and cf3 each use their own divisor.
inline SentenceMetrics compute_metrics(const SentenceCounts& c,
                                       const MetricConfig& cfg = {}) {
  SentenceMetrics m;
  m.lf = language_factor(c);
  m.sf = switching_factor(c);
  m.mf = mix_factor(c);
  m.cmi = code_mixing_index(c);
  MetricConfig variant = cfg;
  variant.dampening = Dampening::RawLF;
  m.cf1 = complexity_factor(c, variant);
  variant.dampening = Dampening::Linear;
  m.cf2 = complexity_factor(c, variant);
  variant.dampening = Dampening::Arctan;
  m.cf3 = complexity_factor(c, variant);
  return m;
}

inline SentenceMetrics analyze_sentence(const Sentence& s,
                                        const MetricConfig& cfg = {}) {
  return compute_metrics(count_sentence(s), cfg);
}

}  // namespace cmix
