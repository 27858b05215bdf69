// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cmix Authors

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "cmix/corpus_stats.hpp"
#include "cmix/synthgen.hpp"
#include "test_util.hpp"

namespace cmix {
namespace {

using testing::sentence_of;

Corpus corpus_of(std::vector<std::string> sentences,
                 std::vector<std::string> registry = default_language_codes()) {
  Corpus c;
  c.name = "test";
  c.tag_registry = std::move(registry);
  for (const auto& s : sentences) {
    auto sent = sentence_of(s);
    sent.index = c.sentences.size();
    c.sentences.push_back(std::move(sent));
  }
  return c;
}

TEST(LanguageDistribution, SingleSentence) {
  const auto rows = language_distribution(corpus_of({"EN EN BN NE"}));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], (LanguageDistributionRow{"EN", 1, 2, 50.0}));
  EXPECT_EQ(rows[1], (LanguageDistributionRow{"BN", 1, 1, 25.0}));
  EXPECT_EQ(rows[2], (LanguageDistributionRow{"Language Independent", 1, 1, 25.0}));
}

TEST(LanguageDistribution, MonolingualCorpus) {
  const auto rows = language_distribution(corpus_of({"HI HI", "HI"}));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (LanguageDistributionRow{"HI", 2, 3, 100.0}));
  EXPECT_EQ(rows[1], (LanguageDistributionRow{"Language Independent", 0, 0, 0.0}));
}

TEST(LanguageDistribution, RegistryOrderNotFirstSeenOrder) {
  const auto rows = language_distribution(corpus_of({"TE HI EN X", "BN"}));
  std::vector<std::string> order;
  for (const auto& r : rows) order.push_back(r.language);
  EXPECT_EQ(order, (std::vector<std::string>{"EN", "BN", "HI", "TE", "Language Independent"}));
}

TEST(LanguageDistribution, EmptyCorpusIsAnError) {
  EXPECT_THROW(language_distribution(Corpus{}), DegenerateInputError);
}

TEST(Aggregate, CmiAllAndMixed) {
  const auto c = corpus_of({"L1 L1 L1 L1 L1 L1 L1 L1 L1 L1", "L1 L2 L3 L4 L5 L6 L7 L8 L9 L10"},
                           synthetic_codes(10));
  const auto r = aggregate(c);
  EXPECT_NEAR(r.cmi_all, 45.0, 1e-9);
  EXPECT_NEAR(r.cmi_mixed, 90.0, 1e-9);
  EXPECT_EQ(r.per_sentence.size(), 2u);
  EXPECT_EQ(r.sentence_count, 2u);
  EXPECT_EQ(r.token_count, 20u);
}

TEST(Aggregate, Cf2SummaryOfAlternatingAndBlocked) {
  const auto c = corpus_of({"L1 L2 L1 L2 L1 L2 L1 L2 L1 L2", "L1 L1 L1 L1 L1 L2 L2 L2 L2 L2"},
                           synthetic_codes(2));
  const auto row = aggregate(c).summary_for(IndexName::CF2);
  EXPECT_NEAR(row.min, 27.5, 0.1);
  EXPECT_NEAR(row.max, 67.5, 1e-9);
  EXPECT_NEAR(row.mean, 47.5, 0.1);
}

TEST(Aggregate, MonolingualSentence) {
  const auto r = aggregate(corpus_of({"EN EN EN"}));
  for (const auto& row : r.summary) {
    if (row.index == IndexName::WordsPerSentence) {
      EXPECT_EQ(row.min, 3.0);
      EXPECT_EQ(row.mean, 3.0);
      continue;
    }
    EXPECT_EQ(row.min, 0.0);
    EXPECT_EQ(row.max, 0.0);
    EXPECT_EQ(row.mean, 0.0);
  }
  EXPECT_EQ(r.cmi_mixed, 0.0);
}

TEST(Aggregate, EmptyCorpusAndBadWeights) {
  EXPECT_THROW(aggregate(Corpus{}), DegenerateInputError);
  EXPECT_THROW(aggregate(corpus_of({"EN BN"}), MetricConfig{0, 0}), std::invalid_argument);
}

Corpus random_corpus(std::uint64_t seed, std::size_t n) {
  GenSpec spec;
  spec.sentence_count = n;
  spec.min_words = 3;
  spec.max_words = 30;
  spec.languages = 3;
  spec.arrangement = Arrangement::Random;
  spec.undefined_ratio = 0.15;
  spec.seed = seed;
  return generate(spec);
}

TEST(Aggregate, PermutationInvariant) {
  auto c = random_corpus(5, 200);
  const auto base = aggregate(c);
  Xoshiro256 rng(99);
  std::shuffle(c.sentences.begin(), c.sentences.end(), rng);
  for (std::size_t i = 0; i < c.sentences.size(); ++i) c.sentences[i].index = i;
  const auto shuffled = aggregate(c);
  EXPECT_EQ(shuffled.summary, base.summary);
  EXPECT_EQ(shuffled.distribution, base.distribution);
  EXPECT_EQ(shuffled.cmi_all, base.cmi_all);
  EXPECT_EQ(shuffled.cmi_mixed, base.cmi_mixed);
}

TEST(Aggregate, ParallelEqualsSequential) {
  const auto c = random_corpus(6, 333);
  const auto seq = aggregate(c, {}, 1);
  for (unsigned t : {2u, 3u, 8u}) {
    const auto par = aggregate(c, {}, t);
    EXPECT_EQ(par.per_sentence, seq.per_sentence);
    EXPECT_EQ(par.summary, seq.summary);
    EXPECT_EQ(par.cmi_mixed, seq.cmi_mixed);
  }
}

TEST(Aggregate, ReportInvariants) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = aggregate(random_corpus(seed, 50));
    for (const auto& row : r.summary) {
      EXPECT_LE(row.min, row.mean);
      EXPECT_LE(row.mean, row.max);
    }
    EXPECT_GE(r.summary_for(IndexName::WordsPerSentence).min, 1.0);
    EXPECT_LE(r.cmi_all, r.cmi_mixed);
    double pct = 0;
    for (const auto& d : r.distribution) pct += d.percentage;
    EXPECT_NEAR(pct, 100.0, 0.01);
  }
}

TEST(ScatterData, OnePairPerSentenceInOrder) {
  const auto c = corpus_of({"L1 L2 L3 L4 L5 L6 L7 L8 L9 L10", "L1 L1 L2"}, synthetic_codes(10));
  const auto r = aggregate(c);
  const auto pts = scatter_data(r, IndexName::CF2);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0].first, 10u);
  EXPECT_NEAR(pts[0].second, 95.0, 1e-9);
  EXPECT_EQ(pts[1].first, 3u);
  EXPECT_THROW(scatter_data(r, "cf9"), std::invalid_argument);
  EXPECT_EQ(scatter_data(r, "CMI").size(), 2u);
}

TEST(Compare, CorpusLevelMeans) {
  CorpusReport a, b;
  for (auto n : kSummaryIndices) {
    a.summary.push_back({n, 0, 75, n == IndexName::CF2 ? 10.54 : 1.0});
    b.summary.push_back({n, 0, 50, n == IndexName::CF2 ? 4.83 : 1.0});
  }
  const auto cmp = compare(a, b);
  EXPECT_NEAR(cmp.at(IndexName::CF2).delta, 5.71, 1e-9);
  EXPECT_EQ(cmp.at(IndexName::CF2).verdict, Verdict::A);
  EXPECT_EQ(cmp.at(IndexName::CMI).verdict, Verdict::Tie);
}

TEST(Compare, IdenticalReportsTie) {
  const auto r = aggregate(random_corpus(3, 40));
  for (const auto& c : compare(r, r).indices) {
    EXPECT_EQ(c.delta, 0.0);
    EXPECT_EQ(c.verdict, Verdict::Tie);
  }
}

// A: one alternating 6-word sentence with a 5:1 split (CMI 16.67, S = 2).
// B: a blocked 6-word sentence with a 3:3 split (CMI 50, S = 1).
TEST(Compare, VerdictsMayDifferPerIndex) {
  const auto a = aggregate(corpus_of({"EN EN BN EN EN EN"}));
  const auto b = aggregate(corpus_of({"EN EN EN BN BN BN"}));
  const auto cmp = compare(a, b);
  EXPECT_EQ(cmp.at(IndexName::CMI).verdict, Verdict::B);
  // CF2: A = 50 (1/6 + 2/5) / (0.25/5 * 2 + 1), B = 50 (1/2 + 1/5) / (0.25/5 * 2 + 1)
  EXPECT_NEAR(cmp.at(IndexName::CF2).mean_a, 50 * (1.0 / 6 + 0.4) / 1.1, 1e-9);
  EXPECT_NEAR(cmp.at(IndexName::CF2).mean_b, 50 * (0.5 + 0.2) / 1.1, 1e-9);

  // Swap in a sentence with more switches but the same dominant share.
  const auto c = aggregate(corpus_of({"EN BN EN BN EN EN EN EN"}));
  const auto d = aggregate(corpus_of({"EN EN EN EN EN BN BN BN"}));
  const auto cmp2 = compare(c, d);
  EXPECT_EQ(cmp2.at(IndexName::CMI).verdict, Verdict::B);
  EXPECT_EQ(cmp2.at(IndexName::CF2).verdict, Verdict::A);
}

}  // namespace
}  // namespace cmix
