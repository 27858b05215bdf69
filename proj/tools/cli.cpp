// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cmix Authors

#include "cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cmix/cmix.hpp"

namespace cmix::cli {
namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

/// Failure tied to one input file; the message is already prefixed with it.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string format = "column";
  std::string codes;
  std::string unknown_tags = "error";
  std::string weights = "50,50";
  unsigned threads = 1;
};

void add_input_options(CLI::App* cmd, InputOptions& o) {
  cmd->add_option("--format", o.format, "Input format")
      ->check(CLI::IsMember({"column", "inline"}))
      ->capture_default_str();
  cmd->add_option("--codes", o.codes,
                  "Comma-separated language codes accepted as languages "
                  "(default: EN,BN,GU,HI,KA,ML,MR,TA,TE)");
  cmd->add_option("--unknown-tags", o.unknown_tags, "Handling of tags outside the registry")
      ->check(CLI::IsMember({"error", "undefined"}))
      ->capture_default_str();
  cmd->add_option("--weights", o.weights, "Weights A,B for the mix and switching factors")
      ->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker threads for per-sentence metrics")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

MetricConfig parse_weights(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("--weights expects two values A,B");
  MetricConfig cfg;
  try {
    std::size_t used = 0;
    cfg.a = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    cfg.b = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
  } catch (const std::logic_error&) {
    throw UsageError("--weights expects two numbers, got '" + text + "'");
  }
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--weights: ") + e.what());
  }
  return cfg;
}

TagPolicy make_policy(const InputOptions& o) {
  TagPolicy policy;
  if (!o.codes.empty()) policy.language_codes = split(o.codes, ',');
  policy.unknown_tag_action =
      o.unknown_tags == "undefined" ? UnknownTagAction::TreatUndefined : UnknownTagAction::Error;
  try {
    return normalized(policy);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--codes: ") + e.what());
  }
}

Corpus load(const std::string& path, const InputOptions& o, std::ostream& err) {
  const TagPolicy policy = make_policy(o);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  ParseWarnings warnings;
  Corpus corpus;
  try {
    corpus = parse_corpus(in, o.format == "inline" ? CorpusFormat::Inline : CorpusFormat::Column,
                          policy, std::filesystem::path(path).stem().string(), warnings);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
  if (in.bad()) throw InputError(path + ": read error");
  if (warnings.skipped_empty_sentences > 0)
    err << "warning: " << path << ": skipped " << warnings.skipped_empty_sentences
        << " empty sentence(s)\n";
  if (corpus.sentences.empty()) throw InputError(path + ": empty corpus");
  return corpus;
}

CorpusReport analyze_file(const std::string& path, const InputOptions& o, std::ostream& err) {
  const MetricConfig cfg = parse_weights(o.weights);
  return aggregate(load(path, o, err), cfg, o.threads);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Code-mixing complexity of language-tagged text", "cmix"};
  app.require_subcommand(1);

  InputOptions analyze_opts;
  std::string analyze_file_path, analyze_out = "json";
  bool per_sentence = false;
  auto* analyze = app.add_subcommand("analyze", "Per-sentence indices and corpus summary");
  analyze->add_option("file", analyze_file_path, "Tagged corpus")->required();
  add_input_options(analyze, analyze_opts);
  analyze->add_option("--out", analyze_out, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  analyze->add_flag("--per-sentence", per_sentence,
                    "CSV: one row per sentence instead of the summary table");

  InputOptions stats_opts;
  std::string stats_file_path, stats_out = "text";
  auto* stats = app.add_subcommand("stats", "Language distribution and index summary");
  stats->add_option("file", stats_file_path, "Tagged corpus")->required();
  add_input_options(stats, stats_opts);
  stats->add_option("--out", stats_out, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  InputOptions compare_opts;
  std::vector<std::string> compare_files;
  std::string compare_out = "json";
  auto* cmp = app.add_subcommand("compare", "Compare the index means of two corpora");
  cmp->add_option("files", compare_files, "Corpus A and corpus B")->required()->expected(2);
  add_input_options(cmp, compare_opts);
  cmp->add_option("--out", compare_out, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  InputOptions plot_opts;
  std::string plot_file_path, plot_index, svg_path, csv_path;
  auto* plot = app.add_subcommand("plot", "Scatter of words per sentence against an index");
  plot->add_option("file", plot_file_path, "Tagged corpus")->required();
  add_input_options(plot, plot_opts);
  plot->add_option("--index", plot_index, "cmi, cf1, cf2 or cf3")->required();
  auto* svg_opt = plot->add_option("--svg", svg_path, "Write an SVG scatter plot");
  auto* csv_opt = plot->add_option("--csv", csv_path, "Write a two-column CSV");
  svg_opt->excludes(csv_opt);
  csv_opt->excludes(svg_opt);

  GenSpec gen;
  std::string words = "10", arrangement = "alternating", gen_output;
  auto* generate = app.add_subcommand("generate", "Emit a synthetic corpus in column format");
  generate->add_option("--sentences", gen.sentence_count, "Number of sentences")
      ->capture_default_str();
  generate->add_option("--words", words, "Words per sentence, W or MIN:MAX")
      ->capture_default_str();
  generate->add_option("--languages", gen.languages, "Number of languages (codes L1..LK)")
      ->capture_default_str();
  generate->add_option("--arrangement", arrangement, "Language arrangement")
      ->check(CLI::IsMember({"alternating", "blocked", "random"}))
      ->capture_default_str();
  generate->add_option("--undefined-ratio", gen.undefined_ratio,
                       "Fraction of Undefined tokens per sentence")
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  generate->add_option("--output", gen_output, "Write to this file instead of stdout");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (analyze->parsed()) {
      const auto report = analyze_file(analyze_file_path, analyze_opts, err);
      if (analyze_out == "json")
        out << report_to_json(report).dump(2) << '\n';
      else if (per_sentence)
        write_per_sentence_csv(out, report);
      else
        write_summary_csv(out, report);
    } else if (stats->parsed()) {
      const auto report = analyze_file(stats_file_path, stats_opts, err);
      if (stats_out == "json")
        out << report_to_json(report, false).dump(2) << '\n';
      else if (stats_out == "csv")
        write_summary_csv(out, report);
      else
        write_stats_text(out, report);
    } else if (cmp->parsed()) {
      const auto a = analyze_file(compare_files[0], compare_opts, err);
      const auto b = analyze_file(compare_files[1], compare_opts, err);
      const auto result = compare(a, b);
      if (compare_out == "json")
        out << comparison_to_json(a, b, result).dump(2) << '\n';
      else
        write_comparison_csv(out, result);
    } else if (plot->parsed()) {
      if (svg_path.empty() && csv_path.empty())
        throw UsageError("plot needs --svg <path> or --csv <path>");
      IndexName index;
      try {
        index = parse_index_name(plot_index);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto report = analyze_file(plot_file_path, plot_opts, err);
      if (!svg_path.empty()) {
        auto file = open_output(svg_path);
        write_scatter_svg(file, report, index);
      } else {
        auto file = open_output(csv_path);
        write_scatter_csv(file, report, index);
      }
    } else if (generate->parsed()) {
      const auto colon = words.find(':');
      try {
        if (colon == std::string::npos) {
          gen.min_words = gen.max_words = std::stoul(words);
        } else {
          gen.min_words = std::stoul(words.substr(0, colon));
          gen.max_words = std::stoul(words.substr(colon + 1));
        }
      } catch (const std::logic_error&) {
        throw UsageError("--words expects W or MIN:MAX, got '" + words + "'");
      }
      gen.arrangement = arrangement == "blocked"  ? Arrangement::Blocked
                        : arrangement == "random" ? Arrangement::Random
                                                  : Arrangement::Alternating;
      Corpus corpus;
      try {
        corpus = cmix::generate(gen);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (gen_output.empty()) {
        write_corpus(out, corpus, CorpusFormat::Column);
      } else {
        auto file = open_output(gen_output);
        write_corpus(file, corpus, CorpusFormat::Column);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}

}  // namespace cmix::cli
