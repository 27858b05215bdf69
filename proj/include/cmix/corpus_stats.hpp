// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cmix Authors

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "cmix/corpus.hpp"
#include "cmix/error.hpp"
#include "cmix/metrics.hpp"

namespace cmix {

inline constexpr std::string_view kLanguageIndependent = "Language Independent";

struct LanguageDistributionRow {
  std::string language;  // a code, or kLanguageIndependent
  std::size_t sentence_count = 0;
  std::size_t word_count = 0;
  double percentage = 0.0;

  friend bool operator==(const LanguageDistributionRow&,
                         const LanguageDistributionRow&) = default;
};

enum class IndexName { CMI, CF1, CF2, CF3, WordsPerSentence };

inline constexpr std::array<IndexName, 5> kSummaryIndices = {
    IndexName::CMI, IndexName::CF1, IndexName::CF2, IndexName::CF3,
    IndexName::WordsPerSentence};

inline std::string_view to_string(IndexName n) noexcept {
  switch (n) {
    case IndexName::CMI: return "CMI";
    case IndexName::CF1: return "CF1";
    case IndexName::CF2: return "CF2";
    case IndexName::CF3: return "CF3";
    case IndexName::WordsPerSentence: return "WORDS_PER_SENTENCE";
  }
  return "?";
}

/// Lower-case name as used on the command line ("cmi", "cf1", ...).
inline std::string_view short_name(IndexName n) noexcept {
  switch (n) {
    case IndexName::CMI: return "cmi";
    case IndexName::CF1: return "cf1";
    case IndexName::CF2: return "cf2";
    case IndexName::CF3: return "cf3";
    case IndexName::WordsPerSentence: return "words";
  }
  return "?";
}

/// Parses one of the plottable index names (case-insensitive).
inline IndexName parse_index_name(std::string_view s) {
  const std::string up = to_upper_ascii(s);
  for (auto n : {IndexName::CMI, IndexName::CF1, IndexName::CF2, IndexName::CF3})
    if (up == to_string(n)) return n;
  throw std::invalid_argument("unknown index '" + std::string(s) +
                              "'; valid indices: cmi, cf1, cf2, cf3");
}

struct IndexSummaryRow {
  IndexName index = IndexName::CMI;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;

  friend bool operator==(const IndexSummaryRow&, const IndexSummaryRow&) = default;
};

struct SentenceRecord {
  std::size_t index = 0;
  SentenceCounts counts;
  SentenceMetrics metrics;

  friend bool operator==(const SentenceRecord&, const SentenceRecord&) = default;
};

inline double value_of(const SentenceRecord& r, IndexName n) noexcept {
  switch (n) {
    case IndexName::CMI: return r.metrics.cmi;
    case IndexName::CF1: return r.metrics.cf1;
    case IndexName::CF2: return r.metrics.cf2;
    case IndexName::CF3: return r.metrics.cf3;
    case IndexName::WordsPerSentence: return static_cast<double>(r.counts.W);
  }
  return 0.0;
}

struct CorpusReport {
  std::string corpus_name;
  MetricConfig config;
  std::size_t sentence_count = 0;
  std::size_t token_count = 0;
  std::vector<LanguageDistributionRow> distribution;
  std::vector<IndexSummaryRow> summary;
  double cmi_all = 0.0;
  double cmi_mixed = 0.0;  // 0 when no sentence has CMI > 0
  std::vector<SentenceRecord> per_sentence;

  const IndexSummaryRow& summary_for(IndexName n) const {
    for (const auto& row : summary)
      if (row.index == n) return row;
    throw std::out_of_range("index not summarized");
  }
};

namespace detail {

/// Mean that does not depend on the order of `values`.
inline double order_free_mean(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace detail

/// One row per registry language present in the corpus, in registry order
/// (codes outside the registry follow in lexical order), then the
/// language-independent row. Percentages are recomputed from word counts.
inline std::vector<LanguageDistributionRow> language_distribution(const Corpus& corpus) {
  if (corpus.sentences.empty()) throw DegenerateInputError("empty corpus");
  std::map<std::string, LanguageDistributionRow> by_code;
  LanguageDistributionRow independent{std::string(kLanguageIndependent)};
  std::size_t total = 0;
  for (const auto& s : corpus.sentences) {
    std::set<std::string> seen;
    bool any_independent = false;
    for (const auto& t : s.tokens) {
      ++total;
      if (t.tag.is_undefined()) {
        ++independent.word_count;
        any_independent = true;
        continue;
      }
      auto& row = by_code[t.tag.code()];
      row.language = t.tag.code();
      ++row.word_count;
      seen.insert(t.tag.code());
    }
    for (const auto& code : seen) ++by_code[code].sentence_count;
    if (any_independent) ++independent.sentence_count;
  }

  std::vector<LanguageDistributionRow> rows;
  for (const auto& code : corpus.tag_registry) {
    auto it = by_code.find(code);
    if (it == by_code.end()) continue;
    rows.push_back(it->second);
    by_code.erase(it);
  }
  for (auto& [code, row] : by_code) rows.push_back(row);
  rows.push_back(independent);
  for (auto& row : rows)
    row.percentage = 100.0 * static_cast<double>(row.word_count) / static_cast<double>(total);
  return rows;
}

/// Per-sentence indices and corpus summaries. With `threads` > 1 the
/// per-sentence work is split across that many threads; the result is
/// identical to the sequential one.
inline CorpusReport aggregate(const Corpus& corpus, const MetricConfig& config = {},
                              unsigned threads = 1) {
  validate(config);
  if (corpus.sentences.empty()) throw DegenerateInputError("empty corpus");

  CorpusReport report;
  report.corpus_name = corpus.name;
  report.config = config;
  report.sentence_count = corpus.sentences.size();
  report.token_count = corpus.token_count();
  report.distribution = language_distribution(corpus);
  report.per_sentence.resize(corpus.sentences.size());

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto& s = corpus.sentences[i];
      auto& rec = report.per_sentence[i];
      rec.index = s.index;
      rec.counts = count_sentence(s);
      rec.metrics = compute_metrics(rec.counts, config);
    }
  };
  const std::size_t n = corpus.sentences.size();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    work(0, n);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t begin = 0; begin < n; begin += chunk)
      pool.emplace_back(work, begin, std::min(n, begin + chunk));
  }

  for (IndexName name : kSummaryIndices) {
    std::vector<double> values;
    values.reserve(n);
    for (const auto& rec : report.per_sentence) values.push_back(value_of(rec, name));
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    IndexSummaryRow row{name, *lo, *hi, 0.0};
    row.mean = detail::order_free_mean(std::move(values));
    // Rounding in the mean can land a hair outside [min, max].
    row.mean = std::clamp(row.mean, row.min, row.max);
    report.summary.push_back(row);
  }

  std::vector<double> mixed;
  for (const auto& rec : report.per_sentence)
    if (rec.metrics.cmi > 0.0) mixed.push_back(rec.metrics.cmi);
  report.cmi_all = report.summary_for(IndexName::CMI).mean;
  report.cmi_mixed = detail::order_free_mean(std::move(mixed));
  return report;
}

/// (W, value) per sentence, in sentence order.
inline std::vector<std::pair<std::size_t, double>> scatter_data(const CorpusReport& report,
                                                                IndexName index) {
  std::vector<std::pair<std::size_t, double>> points;
  points.reserve(report.per_sentence.size());
  for (const auto& rec : report.per_sentence)
    points.emplace_back(rec.counts.W, value_of(rec, index));
  return points;
}

inline std::vector<std::pair<std::size_t, double>> scatter_data(const CorpusReport& report,
                                                                std::string_view index) {
  return scatter_data(report, parse_index_name(index));
}

enum class Verdict { A, B, Tie };

inline std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::A: return "A";
    case Verdict::B: return "B";
    case Verdict::Tie: return "TIE";
  }
  return "TIE";
}

struct IndexComparison {
  IndexName index = IndexName::CMI;
  double mean_a = 0.0;
  double mean_b = 0.0;
  double delta = 0.0;  // mean_a - mean_b
  Verdict verdict = Verdict::Tie;
};

struct Comparison {
  std::string name_a;
  std::string name_b;
  std::vector<IndexComparison> indices;

  const IndexComparison& at(IndexName n) const {
    for (const auto& c : indices)
      if (c.index == n) return c;
    throw std::out_of_range("index not compared");
  }
};

/// Means closer than this are reported as a tie.
inline constexpr double kTieTolerance = 1e-9;

/// Per-index mean deltas (A - B); the verdict names the corpus with the
/// higher mean.
inline Comparison compare(const CorpusReport& a, const CorpusReport& b) {
  Comparison cmp{a.corpus_name, b.corpus_name, {}};
  for (IndexName name : kSummaryIndices) {
    IndexComparison c{name, a.summary_for(name).mean, b.summary_for(name).mean};
    c.delta = c.mean_a - c.mean_b;
    if (std::abs(c.delta) <= kTieTolerance) {
      c.delta = 0.0;
      c.verdict = Verdict::Tie;
    } else {
      c.verdict = c.delta > 0.0 ? Verdict::A : Verdict::B;
    }
    cmp.indices.push_back(c);
  }
  return cmp;
}

}  // namespace cmix
