// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cmix Authors

#pragma once

// Serialization of reports and comparisons. All writers are deterministic:
// fixed key order in JSON, fixed column order in CSV, fixed element order in
// SVG. Human-facing numbers are fixed-point with two decimals; JSON also
// carries full-precision values under "raw".

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cmix/corpus_stats.hpp"
#include "cmix/metrics.hpp"
#include "json.hpp"

namespace cmix {

using ordered_json = nlohmann::ordered_json;

/// Fixed-point text with `decimals` digits.
inline std::string fixed(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

inline double round2(double v) { return std::round(v * 100.0) / 100.0; }

namespace detail {

template <class Round>
ordered_json summary_json(const CorpusReport& r, Round round) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.summary)
    rows.push_back({{"index", to_string(row.index)},
                    {"min", round(row.min)},
                    {"max", round(row.max)},
                    {"mean", round(row.mean)}});
  return rows;
}

template <class Round>
ordered_json sentence_json(const SentenceRecord& rec, Round round) {
  const auto& c = rec.counts;
  const auto& m = rec.metrics;
  return {{"index", rec.index}, {"W", c.W},        {"u", c.u},          {"N", c.N},
          {"S", c.S},           {"LF", round(m.lf)}, {"SF", round(m.sf)}, {"MF", round(m.mf)},
          {"CMI", round(m.cmi)}, {"CF1", round(m.cf1)}, {"CF2", round(m.cf2)},
          {"CF3", round(m.cf3)}};
}

inline ordered_json distribution_json(const CorpusReport& r) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.distribution)
    rows.push_back({{"language", row.language},
                    {"sentences", row.sentence_count},
                    {"words", row.word_count},
                    {"percentage", round2(row.percentage)}});
  return rows;
}

}  // namespace detail

/// Report as JSON. Per-sentence records are included when
/// `include_per_sentence` is set.
inline ordered_json report_to_json(const CorpusReport& r, bool include_per_sentence = true) {
  const auto identity = [](double v) { return v; };
  const auto rounded = [](double v) { return round2(v); };

  ordered_json j;
  j["corpus"] = r.corpus_name;
  j["weights"] = {{"a", r.config.a}, {"b", r.config.b}};
  j["sentences"] = r.sentence_count;
  j["tokens"] = r.token_count;
  j["distribution"] = detail::distribution_json(r);
  j["summary"] = detail::summary_json(r, rounded);
  j["cmi_all"] = round2(r.cmi_all);
  j["cmi_mixed"] = round2(r.cmi_mixed);
  if (include_per_sentence) {
    j["per_sentence"] = ordered_json::array();
    for (const auto& rec : r.per_sentence)
      j["per_sentence"].push_back(detail::sentence_json(rec, rounded));
  }

  ordered_json raw;
  raw["summary"] = detail::summary_json(r, identity);
  raw["cmi_all"] = r.cmi_all;
  raw["cmi_mixed"] = r.cmi_mixed;
  if (include_per_sentence) {
    raw["per_sentence"] = ordered_json::array();
    for (const auto& rec : r.per_sentence)
      raw["per_sentence"].push_back(detail::sentence_json(rec, identity));
  }
  j["raw"] = std::move(raw);
  return j;
}

inline constexpr std::string_view kPerSentenceCsvHeader =
    "index,W,u,N,S,LF,SF,MF,CMI,CF1,CF2,CF3";

inline void write_per_sentence_csv(std::ostream& out, const CorpusReport& r) {
  out << kPerSentenceCsvHeader << '\n';
  for (const auto& rec : r.per_sentence) {
    const auto& c = rec.counts;
    const auto& m = rec.metrics;
    out << rec.index << ',' << c.W << ',' << c.u << ',' << c.N << ',' << c.S << ','
        << fixed(m.lf) << ',' << fixed(m.sf) << ',' << fixed(m.mf) << ',' << fixed(m.cmi)
        << ',' << fixed(m.cf1) << ',' << fixed(m.cf2) << ',' << fixed(m.cf3) << '\n';
  }
}

/// Summary rows followed by CMI_ALL and CMI_MIXED (min = max = mean).
inline void write_summary_csv(std::ostream& out, const CorpusReport& r) {
  out << "index,min,max,mean\n";
  for (const auto& row : r.summary)
    out << to_string(row.index) << ',' << fixed(row.min) << ',' << fixed(row.max) << ','
        << fixed(row.mean) << '\n';
  out << "CMI_ALL," << fixed(r.cmi_all) << ',' << fixed(r.cmi_all) << ','
      << fixed(r.cmi_all) << '\n';
  out << "CMI_MIXED," << fixed(r.cmi_mixed) << ',' << fixed(r.cmi_mixed) << ','
      << fixed(r.cmi_mixed) << '\n';
}

namespace detail {

inline std::string pad(std::string_view s, std::size_t width, bool left = true) {
  std::string out(s);
  if (out.size() >= width) return out;
  const std::string fill(width - out.size(), ' ');
  return left ? out + fill : fill + out;
}

}  // namespace detail

/// Plain-text distribution and summary tables.
inline void write_stats_text(std::ostream& out, const CorpusReport& r) {
  using detail::pad;
  out << "Corpus: " << (r.corpus_name.empty() ? "(unnamed)" : r.corpus_name) << '\n';
  out << "Sentences: " << r.sentence_count << "  Tokens: " << r.token_count << "\n\n";

  out << pad("Language", 22) << pad("Sentences", 11, false) << pad("Words", 10, false)
      << pad("Percentage", 12, false) << '\n';
  for (const auto& row : r.distribution)
    out << pad(row.language, 22) << pad(std::to_string(row.sentence_count), 11, false)
        << pad(std::to_string(row.word_count), 10, false)
        << pad(fixed(row.percentage), 12, false) << '\n';
  out << '\n';

  out << pad("Index", 22) << pad("Minimum", 11, false) << pad("Maximum", 10, false)
      << pad("Average", 12, false) << '\n';
  for (const auto& row : r.summary)
    out << pad(to_string(row.index), 22) << pad(fixed(row.min), 11, false)
        << pad(fixed(row.max), 10, false) << pad(fixed(row.mean), 12, false) << '\n';
  out << '\n';
  out << "CMI-all: " << fixed(r.cmi_all) << "  CMI-mixed: " << fixed(r.cmi_mixed) << '\n';
}

inline ordered_json comparison_to_json(const CorpusReport& a, const CorpusReport& b,
                                       const Comparison& cmp) {
  ordered_json j;
  j["a"] = report_to_json(a, false);
  j["b"] = report_to_json(b, false);
  ordered_json rows = ordered_json::array();
  for (const auto& c : cmp.indices)
    rows.push_back({{"index", to_string(c.index)},
                    {"mean_a", round2(c.mean_a)},
                    {"mean_b", round2(c.mean_b)},
                    {"delta", round2(c.delta)},
                    {"verdict", to_string(c.verdict)},
                    {"raw", {{"mean_a", c.mean_a}, {"mean_b", c.mean_b}, {"delta", c.delta}}}});
  j["comparison"] = std::move(rows);
  return j;
}

inline void write_comparison_csv(std::ostream& out, const Comparison& cmp) {
  out << "index,mean_a,mean_b,delta,verdict\n";
  for (const auto& c : cmp.indices)
    out << to_string(c.index) << ',' << fixed(c.mean_a) << ',' << fixed(c.mean_b) << ','
        << fixed(c.delta) << ',' << to_string(c.verdict) << '\n';
}

/// Two-column CSV "words,<index>" with one row per sentence.
inline void write_scatter_csv(std::ostream& out, const CorpusReport& r, IndexName index) {
  out << "words," << short_name(index) << '\n';
  for (const auto& [w, v] : scatter_data(r, index)) out << w << ',' << fixed(v) << '\n';
}

namespace detail {

/// Smallest value of the form k * 10^e (k in {1, 2, 5, 10}) that is >= v / 5.
inline double nice_step(double v) {
  if (v <= 0.0) return 1.0;
  const double raw = v / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double k : {1.0, 2.0, 5.0, 10.0})
    if (k * mag >= raw) return k * mag;
  return 10.0 * mag;
}

inline std::string num(double v) { return fixed(v, 2); }

}  // namespace detail

/// Scatter plot of words per sentence (x) against `index` (y). Each sentence
/// is one <circle>; no other element uses that tag.
inline void write_scatter_svg(std::ostream& out, const CorpusReport& r, IndexName index) {
  using detail::num;
  constexpr double width = 640, height = 480;
  constexpr double left = 70, right = 20, top = 40, bottom = 60;
  constexpr double plot_w = width - left - right, plot_h = height - top - bottom;

  const auto points = scatter_data(r, index);
  double x_max = 1.0, y_max = 1.0;
  for (const auto& [w, v] : points) {
    x_max = std::max(x_max, static_cast<double>(w));
    y_max = std::max(y_max, v);
  }
  const double x_step = detail::nice_step(x_max);
  const double y_step = detail::nice_step(y_max);
  x_max = std::ceil(x_max / x_step) * x_step;
  y_max = std::ceil(y_max / y_step) * y_step;
  const int x_ticks = static_cast<int>(std::lround(x_max / x_step));
  const int y_ticks = static_cast<int>(std::lround(y_max / y_step));

  const auto sx = [&](double x) { return left + x / x_max * plot_w; };
  const auto sy = [&](double y) { return top + plot_h - y / y_max * plot_h; };
  const std::string label = to_upper_ascii(short_name(index));

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' '
      << num(height) << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(width / 2) << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">Words per sentence vs. " << label
      << "</text>\n";

  out << "<g stroke=\"black\" stroke-width=\"1\">\n";
  out << "<line x1=\"" << num(left) << "\" y1=\"" << num(top + plot_h) << "\" x2=\""
      << num(left + plot_w) << "\" y2=\"" << num(top + plot_h) << "\"/>\n";
  out << "<line x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left)
      << "\" y2=\"" << num(top + plot_h) << "\"/>\n";
  for (int k = 0; k <= x_ticks; ++k)
    out << "<line x1=\"" << num(sx(k * x_step)) << "\" y1=\"" << num(top + plot_h) << "\" x2=\""
        << num(sx(k * x_step)) << "\" y2=\"" << num(top + plot_h + 5) << "\"/>\n";
  for (int k = 0; k <= y_ticks; ++k)
    out << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(sy(k * y_step)) << "\" x2=\""
        << num(left) << "\" y2=\"" << num(sy(k * y_step)) << "\"/>\n";
  out << "</g>\n";

  out << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int k = 0; k <= x_ticks; ++k)
    out << "<text x=\"" << num(sx(k * x_step)) << "\" y=\"" << num(top + plot_h + 18)
        << "\" text-anchor=\"middle\">" << fixed(k * x_step, x_step < 1 ? 1 : 0) << "</text>\n";
  for (int k = 0; k <= y_ticks; ++k)
    out << "<text x=\"" << num(left - 8) << "\" y=\"" << num(sy(k * y_step) + 4)
        << "\" text-anchor=\"end\">" << fixed(k * y_step, y_step < 1 ? 1 : 0) << "</text>\n";
  out << "</g>\n";

  out << "<text x=\"" << num(left + plot_w / 2) << "\" y=\"" << num(height - 15)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << "words per sentence</text>\n";
  out << "<text x=\"18\" y=\"" << num(top + plot_h / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
      << "transform=\"rotate(-90 18 " << num(top + plot_h / 2) << ")\">" << label
      << "</text>\n";

  out << "<g fill=\"steelblue\" fill-opacity=\"0.6\">\n";
  for (const auto& [w, v] : points)
    out << "<circle cx=\"" << num(sx(static_cast<double>(w))) << "\" cy=\"" << num(sy(v))
        << "\" r=\"3\"/>\n";
  out << "</g>\n";
  out << "</svg>\n";
}

}  // namespace cmix
