// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cmix Authors

// Scores a small inline-format corpus and prints per-sentence indices.

#include <cstdio>
#include <string>

#include "cmix/cmix.hpp"

int main() {
  const std::string text =
      "Ki/BN post/EN korcho/BN Public/EN forum/EN eta/BN\n"
      "It/EN is/EN painful/EN je/BN khelata/BN harlam/BN\n";
  const auto corpus = cmix::parse_corpus(text, cmix::CorpusFormat::Inline, cmix::TagPolicy{});
  const auto report = cmix::aggregate(corpus, cmix::MetricConfig{});
  for (const auto& r : report.per_sentence)
    std::printf("sentence %zu: CMI %.2f CF2 %.2f CF3 %.2f\n", r.index, r.metrics.cmi,
                r.metrics.cf2, r.metrics.cf3);
  std::printf("CMI over all sentences: %.2f\n", report.cmi_all);
}
