// Copyright 2026-present the vidrec project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "generators.hpp"
#include "sample_fixture.hpp"
#include "vidrec/engine.hpp"
#include "vidrec/error.hpp"

namespace vidrec {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected vidrec::Error";
  return ErrorCode::kIo;
}

ModelIndex sample_index() { return build_index(testing::sample_catalog()); }

ModelIndex reload(const std::string& text) {
  std::istringstream in(text);
  return load_index(in);
}

TEST(EngineConfig, DefaultsReproduceSamplePipeline) {
  EngineConfig config;
  Catalog c = load_catalog(testing::sample_catalog_path(), config.make_preprocessor());
  EXPECT_EQ(c.documents[4].tokens,
            (std::vector<std::string>{"novel", "tomhank", "inspirational", "romance"}));
  EXPECT_EQ(config.aggregation, Aggregation::kMax);
}

TEST(EngineConfig, ParsesPathsRelativeToConfigFile) {
  testing::TempDir dir;
  std::ofstream(dir / "stop.txt") << "drama\n";
  std::ofstream(dir / "cfg.json")
      << R"({"stopword_path": "stop.txt", "aggregation": "mean", "idf_base": 10,
             "tie_break": "catalog-ordinal"})";
  EngineConfig config = EngineConfig::from_file(dir / "cfg.json");
  EXPECT_EQ(config.stopword_path, dir / "stop.txt");
  EXPECT_TRUE(config.collapse_list_path.empty());
  EXPECT_EQ(config.aggregation, Aggregation::kMean);
  TextPreprocessor pre = config.make_preprocessor();
  EXPECT_TRUE(pre.stopwords().contains("drama"));
  EXPECT_FALSE(pre.stopwords().contains("the"));
}

TEST(EngineConfig, RejectsUnsupportedSettings) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return EngineConfig::parse(in);
  };
  EXPECT_EQ(code_of([&] { parse(R"({"idf_base": 2.718})"); }), ErrorCode::kFormat);
  EXPECT_EQ(code_of([&] { parse(R"({"tie_break": "random"})"); }), ErrorCode::kFormat);
  EXPECT_EQ(code_of([&] { parse(R"({"aggregation": "sum"})"); }), ErrorCode::kFormat);
  EXPECT_EQ(code_of([&] { parse(R"({"stopwords": "x"})"); }), ErrorCode::kFormat);
  EXPECT_EQ(code_of([&] { parse("not json"); }), ErrorCode::kFormat);
}

TEST(ModelIndex, SaveLoadSaveIsByteIdentical) {
  ModelIndex index = sample_index();
  const std::string first = index_text(index);
  ModelIndex loaded = reload(first);
  EXPECT_EQ(loaded.model, index.model);
  EXPECT_EQ(loaded.titles, index.titles);
  EXPECT_EQ(index_text(loaded), first);
}

TEST(ModelIndex, KeysAreSortedAndVersioned) {
  const std::string text = index_text(sample_index());
  std::vector<std::size_t> positions;
  for (const char* key : {"\"doc_count\"", "\"doc_freq\"", "\"doc_lengths\"",
                          "\"format_version\"", "\"term_counts\"", "\"titles\"",
                          "\"vectors\"", "\"vocabulary\""}) {
    positions.push_back(text.find(key));
    ASSERT_NE(positions.back(), std::string::npos) << key;
  }
  EXPECT_TRUE(std::is_sorted(positions.begin(), positions.end()));
  EXPECT_NE(text.find("\"format_version\": 1"), std::string::npos);
}

TEST(ModelIndexProperty, RandomModelsRoundTripExactly) {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 200; ++trial) {
    auto corpus = testing::gen::corpus(rng, 12, 15, 20);
    ModelIndex index{fit(corpus), {}};
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      index.titles.push_back("Title \"" + std::to_string(i) + "\"\n\xc3\xa9");
    }
    const std::string text = index_text(index);
    ModelIndex loaded = reload(text);
    ASSERT_EQ(loaded.model, index.model);
    ASSERT_EQ(loaded.titles, index.titles);
    ASSERT_EQ(index_text(loaded), text);
  }
}

TEST(ModelIndex, RejectsCorruptFiles) {
  const std::string good = index_text(sample_index());
  auto replaced = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  EXPECT_EQ(code_of([&] { reload(replaced("\"format_version\": 1", "\"format_version\": 2")); }),
            ErrorCode::kFormat);
  EXPECT_EQ(code_of([&] { reload(replaced("\"doc_count\": 5", "\"doc_count\": 4")); }),
            ErrorCode::kFormat);
  // Tamper with Ironman's first weight.
  EXPECT_EQ(code_of([&] { reload(replaced("[[0,0.0795", "[[0,0.0895")); }),
            ErrorCode::kFormat);
  EXPECT_EQ(code_of([&] { reload(good.substr(0, good.size() / 2)); }), ErrorCode::kFormat);
  EXPECT_EQ(code_of([] { load_index("/nonexistent/index.json"); }), ErrorCode::kIo);
}

TEST(QueryEngine, SimilarAndRecommend) {
  QueryEngine engine(sample_index());
  auto recs = engine.similar("Ironman", 3);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(engine.titles()[recs[0].video_id], "Avengers");

  std::vector<VideoId> titanic = {1};
  auto from_ids = engine.recommend(titanic, 2);
  ASSERT_EQ(from_ids.size(), 2u);
  EXPECT_EQ(from_ids[0].video_id, 3u);
  EXPECT_EQ(from_ids[1].video_id, 4u);
}

TEST(QueryEngine, UnknownTitleListsPrefixMatches) {
  QueryEngine engine(sample_index());
  try {
    engine.similar("Ironmen", 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownVideo);
    EXPECT_NE(std::string(e.what()).find("no titles share that prefix"), std::string::npos);
  }
  try {
    engine.similar("Iron", 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("Ironman"), std::string::npos);
  }
  EXPECT_EQ(engine.titles_with_prefix("Ti"), (std::vector<std::string>{"Titanic"}));
}

TEST(QueryEngine, UnknownIdIsRejected) {
  QueryEngine engine(sample_index());
  std::vector<VideoId> bad = {9};
  EXPECT_EQ(code_of([&] { engine.recommend(bad, 1); }), ErrorCode::kUnknownVideo);
}

}  // namespace
}  // namespace vidrec
