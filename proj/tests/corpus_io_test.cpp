// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cmix Authors

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cmix/corpus_io.hpp"
#include "cmix/synthgen.hpp"
#include "test_util.hpp"

namespace cmix {
namespace {

std::vector<LanguageTag> tags_of(const Sentence& s) {
  std::vector<LanguageTag> out;
  for (const auto& t : s.tokens) out.push_back(t.tag);
  return out;
}

TEST(NormalizeTag, RegistryMembershipIsCaseInsensitive) {
  const TagPolicy p;
  EXPECT_EQ(normalize_tag("en", p), LanguageTag::language("EN"));
  EXPECT_EQ(normalize_tag("En", p).code(), "EN");
  EXPECT_EQ(normalize_tag("te", p).code(), "TE");
}

TEST(NormalizeTag, UndefinedAliasesKeepTheirReason) {
  const TagPolicy p;
  EXPECT_EQ(normalize_tag("NE", p).undefined_reason(), UndefinedReason::NE);
  EXPECT_EQ(normalize_tag("x", p).undefined_reason(), UndefinedReason::X);
  EXPECT_EQ(normalize_tag("MIX", p).undefined_reason(), UndefinedReason::MIX);
  EXPECT_EQ(normalize_tag("univ", p).undefined_reason(), UndefinedReason::UN);
  EXPECT_TRUE(normalize_tag("UN", p).is_undefined());
}

TEST(NormalizeTag, UnknownTagFollowsPolicy) {
  TagPolicy p;
  EXPECT_THROW(normalize_tag("zz", p), UnknownTagError);
  p.unknown_tag_action = UnknownTagAction::TreatUndefined;
  const auto t = normalize_tag("zz", p);
  EXPECT_TRUE(t.is_undefined());
  EXPECT_EQ(t.undefined_reason(), UndefinedReason::OTHER);
}

TEST(NormalizeTag, EmptyRawTagRejected) {
  EXPECT_THROW(normalize_tag("", TagPolicy{}), std::invalid_argument);
}

TEST(TagPolicyTest, CodesAndAliasesMustBeDisjoint) {
  auto p = TagPolicy::with_languages({"EN", "ne"});
  EXPECT_THROW(normalized(p), std::invalid_argument);
}

TEST(LanguageTagTest, UndefinedTagsCompareEqualRegardlessOfReason) {
  EXPECT_EQ(LanguageTag::undefined(UndefinedReason::NE),
            LanguageTag::undefined(UndefinedReason::X));
  EXPECT_NE(LanguageTag::language("EN"), LanguageTag::language("BN"));
  EXPECT_NE(LanguageTag::language("EN"), LanguageTag::undefined());
}

TEST(ParseColumn, MinimalInput) {
  const auto c = parse_corpus("Boss\tEN\najkal\tBN\n\n", CorpusFormat::Column);
  ASSERT_EQ(c.sentences.size(), 1u);
  ASSERT_EQ(c.sentences[0].tokens.size(), 2u);
  EXPECT_EQ(c.sentences[0].tokens[0].surface, "Boss");
  EXPECT_EQ(tags_of(c.sentences[0]),
            (std::vector{LanguageTag::language("EN"), LanguageTag::language("BN")}));
}

TEST(ParseColumn, MissingTagFieldReportsLine) {
  try {
    parse_corpus("word\n", CorpusFormat::Column);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_NE(std::string(e.what()).find("missing tag"), std::string::npos);
  }
}

TEST(ParseColumn, ExtraFieldRejected) {
  try {
    parse_corpus("a\tEN\nb\tEN\tBN\n", CorpusFormat::Column);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseColumn, UnknownTagNamesTagAndLine) {
  try {
    parse_corpus("a\tEN\n\nb\tzz\n", CorpusFormat::Column);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("'zz'"), std::string::npos);
  }
}

TEST(ParseColumn, CrLfAndMissingFinalBlankLine) {
  const auto c = parse_corpus("a\tEN\r\nb\tBN\r\n\r\nc\tHI", CorpusFormat::Column);
  ASSERT_EQ(c.sentences.size(), 2u);
  EXPECT_EQ(c.sentences[0].tokens[1].tag.code(), "BN");
  EXPECT_EQ(c.sentences[1].tokens[0].surface, "c");
  EXPECT_EQ(c.sentences[1].index, 1u);
}

TEST(ParseColumn, EmptySentencesSkippedWithWarning) {
  std::istringstream in("a\tEN\n\n\n\nb\tBN\n\n\n\n");
  ParseWarnings w;
  const auto c = parse_column_format(in, TagPolicy{}, "x", w);
  EXPECT_EQ(c.sentences.size(), 2u);
  EXPECT_EQ(w.skipped_empty_sentences, 2u);  // trailing blank lines do not count
  EXPECT_NO_THROW(validate(c));
}

TEST(ParseColumn, EmptyInputGivesEmptyCorpus) {
  EXPECT_TRUE(parse_corpus("", CorpusFormat::Column).sentences.empty());
  EXPECT_TRUE(parse_corpus("\n\n", CorpusFormat::Column).sentences.empty());
}

TEST(ParseColumn, GujaratiFixture) {
  const auto c = testing::load_fixture("case_06.tsv");
  ASSERT_EQ(c.sentences.size(), 1u);
  const std::vector<std::string> want = {"GU", "EN", "GU", "EN", "GU"};
  std::vector<std::string> got;
  for (const auto& t : c.sentences[0].tokens) got.push_back(t.tag.code());
  EXPECT_EQ(got, want);
}

TEST(ParseInline, Basic) {
  const auto c = parse_corpus("Ki/BN post/EN korcho/BN", CorpusFormat::Inline);
  ASSERT_EQ(c.sentences.size(), 1u);
  EXPECT_EQ(c.sentences[0].tokens.size(), 3u);
}

TEST(ParseInline, LastSlashSeparates) {
  const auto c = parse_corpus("a/b/EN", CorpusFormat::Inline);
  EXPECT_EQ(c.sentences[0].tokens[0].surface, "a/b");
  EXPECT_EQ(c.sentences[0].tokens[0].tag.code(), "EN");
}

TEST(ParseInline, MissingSeparatorReportsPosition) {
  try {
    parse_corpus("ok/EN\nword EN", CorpusFormat::Inline);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.token(), 1u);
  }
}

TEST(ParseInline, EmptyPiecesRejected) {
  EXPECT_THROW(parse_corpus("a/EN  b/BN", CorpusFormat::Inline), ParseError);
  EXPECT_THROW(parse_corpus("/EN", CorpusFormat::Inline), ParseError);
  EXPECT_THROW(parse_corpus("a/", CorpusFormat::Inline), ParseError);
}

TEST(ParseInline, BlankLinesSkipped) {
  std::istringstream in("\na/EN\n\nb/BN\r\n\n");
  ParseWarnings w;
  const auto c = parse_inline_format(in, TagPolicy{}, "", w);
  EXPECT_EQ(c.sentences.size(), 2u);
  EXPECT_EQ(w.skipped_empty_sentences, 2u);
}

TEST(WriteCorpus, ColumnIsByteExact) {
  Corpus c;
  c.tag_registry = default_language_codes();
  c.sentences.push_back({0,
                         {{"Boss", LanguageTag::language("EN")},
                          {",", LanguageTag::undefined(UndefinedReason::X)},
                          {"ajkal", LanguageTag::language("BN")}}});
  EXPECT_EQ(write_corpus(c, CorpusFormat::Column), "Boss\tEN\n,\tX\najkal\tBN\n\n");
  EXPECT_EQ(write_corpus(c, CorpusFormat::Inline), "Boss/EN ,/X ajkal/BN\n");
}

TEST(WriteCorpus, NameIsNotWritten) {
  Corpus c;
  c.name = "";
  c.sentences.push_back({0, {{"a", LanguageTag::language("EN")}}});
  EXPECT_EQ(write_corpus(c, CorpusFormat::Column), "a\tEN\n\n");
  c.name = "named";
  EXPECT_EQ(write_corpus(c, CorpusFormat::Column), "a\tEN\n\n");
}

TEST(WriteCorpus, InlineRejectsSpacesInSurface) {
  Corpus c;
  c.sentences.push_back({0, {{"a b", LanguageTag::language("EN")}}});
  EXPECT_THROW(write_corpus(c, CorpusFormat::Inline), std::invalid_argument);
}

TEST(WriteCorpus, OtherReasonWrittenAsUniversalTag) {
  Corpus c;
  c.sentences.push_back({0, {{"q", LanguageTag::undefined(UndefinedReason::OTHER)}}});
  EXPECT_EQ(write_corpus(c, CorpusFormat::Column), "q\tUN\n\n");
}

TEST(RoundTrip, FixturesInBothFormats) {
  for (const char* name : {"cases_1_4.tsv", "cases_5_11.tsv", "case_06.tsv"}) {
    const auto policy = std::string(name) == "cases_1_4.tsv" ? testing::synthetic_policy()
                                                             : TagPolicy{};
    const auto c = testing::load_fixture(name, policy);
    for (auto fmt : {CorpusFormat::Column, CorpusFormat::Inline})
      EXPECT_EQ(parse_corpus(write_corpus(c, fmt), fmt, policy, name), c) << name;
  }
}

TEST(RoundTrip, InlineFixtureMatchesColumnFixture) {
  const auto col = testing::load_fixture("cases_5_11.tsv");
  auto inl = testing::load_fixture("cases_5_11.txt");
  inl.name = col.name;
  EXPECT_EQ(inl, col);
  EXPECT_EQ(testing::read_file(testing::fixture_path("cases_5_11.tsv")),
            write_corpus(col, CorpusFormat::Column));
}

TEST(RoundTrip, GeneratedCorpora) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GenSpec spec;
    spec.sentence_count = 5;
    spec.min_words = 3;
    spec.max_words = 12;
    spec.languages = 3;
    spec.arrangement = Arrangement::Random;
    spec.undefined_ratio = 0.2;
    spec.seed = seed;
    const auto c = generate(spec);
    const auto policy = TagPolicy::with_languages(c.tag_registry);
    for (auto fmt : {CorpusFormat::Column, CorpusFormat::Inline}) {
      auto back = parse_corpus(write_corpus(c, fmt), fmt, policy, c.name);
      EXPECT_EQ(back, c);
    }
  }
}

}  // namespace
}  // namespace cmix
