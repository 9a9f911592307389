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

#include <algorithm>
#include <random>
#include <sstream>

#include "generators.hpp"
#include "sample_fixture.hpp"
#include "vidrec/error.hpp"
#include "vidrec/recommender.hpp"

namespace vidrec {
namespace {

constexpr VideoId kIronman = 0, kTitanic = 1, kAvengers = 2, kGatsby = 3, kForrest = 4;

class SampleRecommender : public ::testing::Test {
 protected:
  SampleRecommender() : matrix_(similarity_matrix(testing::sample_model())) {}

  WatchHistory history(std::vector<VideoId> ids) const {
    return WatchHistory("user-a", ids, matrix_.size());
  }
  std::vector<VideoId> ids(const std::vector<Recommendation>& recs) const {
    std::vector<VideoId> out;
    for (const auto& r : recs) out.push_back(r.video_id);
    return out;
  }

  SimilarityMatrix matrix_;
};

TEST_F(SampleRecommender, ScoreCandidate) {
  EXPECT_NEAR(score_candidate(matrix_, history({kIronman}), kAvengers), 0.471211, 1e-6);
  EXPECT_EQ(score_candidate(matrix_, history({kIronman}), kTitanic), 0.0);
  EXPECT_NEAR(score_candidate(matrix_, history({kIronman, kTitanic}), kGatsby), 0.207325,
              1e-6);
}

TEST_F(SampleRecommender, ScoreCandidatePreconditions) {
  EXPECT_THROW(score_candidate(matrix_, history({kIronman}), kIronman), Error);
  EXPECT_THROW(score_candidate(matrix_, history({}), kIronman), Error);
}

TEST_F(SampleRecommender, IronmanRecommendsOnlyAvengers) {
  for (std::size_t k = 1; k <= 5; ++k) {
    EXPECT_EQ(ids(recommend(matrix_, history({kIronman}), k)),
              (std::vector<VideoId>{kAvengers}));
  }
}

TEST_F(SampleRecommender, TitanicRanksGatsbyThenForrest) {
  auto recs = recommend(matrix_, history({kTitanic}), 2);
  ASSERT_EQ(ids(recs), (std::vector<VideoId>{kGatsby, kForrest}));
  EXPECT_NEAR(recs[0].score, 0.207325, 1e-6);
  EXPECT_NEAR(recs[1].score, 0.098452, 1e-6);
}

TEST_F(SampleRecommender, EmptyHistoryGivesEmptyList) {
  EXPECT_TRUE(recommend(matrix_, history({}), 3).empty());
}

TEST_F(SampleRecommender, ZeroKIsRejected) {
  EXPECT_THROW(recommend(matrix_, history({kIronman}), 0), Error);
}

TEST_F(SampleRecommender, MeanAggregation) {
  // (0 + 0.207325) / 2 for Gatsby against {Ironman, Titanic}.
  EXPECT_NEAR(score_candidate(matrix_, history({kIronman, kTitanic}), kGatsby,
                              Aggregation::kMean),
              0.207325 / 2, 1e-6);
}

TEST(WatchHistory, DeduplicatesAndValidates) {
  std::vector<VideoId> ids = {3, 1, 3};
  WatchHistory h("u", ids, 5);
  EXPECT_EQ(h.watched(), (std::vector<VideoId>{3, 1}));
  std::vector<VideoId> bad = {5};
  try {
    WatchHistory("u", bad, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownVideo);
  }
}

TEST(RankingKey, RoundsAwayLastBits) {
  EXPECT_EQ(ranking_key(1.5699891637023468e-05), ranking_key(1.5699891637023465e-05));
  EXPECT_EQ(ranking_key(0.0), 0.0);
  EXPECT_EQ(ranking_key(1.0), 1.0);
  EXPECT_EQ(ranking_key(0.5), 0.5);
  EXPECT_LT(ranking_key(0.25), ranking_key(0.2500001));
  EXPECT_NEAR(ranking_key(0.471211), 0.471211, 1e-12);
}

TEST(RankingKeyProperty, MonotoneNonDecreasing) {
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    ASSERT_LE(ranking_key(a), ranking_key(b));
    ASSERT_LE(ranking_key(a), ranking_key(std::nextafter(a, 2.0)));
  }
}

TEST(Recommend, TiesBreakByAscendingId) {
  std::vector<SparseVector> v = {SparseVector::from_entries({{0, 1.0}}),
                                 SparseVector::from_entries({{0, 1.0}, {1, 1.0}}),
                                 SparseVector::from_entries({{0, 2.0}, {1, 2.0}})};
  SimilarityMatrix s = similarity_matrix(v);
  std::vector<VideoId> watched = {0};
  auto recs = recommend(s, WatchHistory("u", watched, 3), 5);
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].score, recs[1].score);
  EXPECT_EQ(recs[0].video_id, 1u);
  EXPECT_EQ(recs[1].video_id, 2u);
}

// Random catalogs: output invariants, prefix monotonicity in k and ranking
// invariance under uniform scaling of every vector.
TEST(RecommendProperty, InvariantsHoldOnRandomCatalogs) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> alpha_dist(0.01, 100.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 2 + trial % 14;
    std::vector<SparseVector> vectors;
    for (std::size_t i = 0; i < n; ++i) vectors.push_back(testing::gen::sparse(rng, 12, 0.25));
    SimilarityMatrix s = similarity_matrix(vectors);

    std::vector<VideoId> watched;
    std::bernoulli_distribution take(0.3);
    for (VideoId i = 0; i < n; ++i) {
      if (take(rng)) watched.push_back(i);
    }
    WatchHistory h("u", watched, n);

    std::vector<Recommendation> previous;
    for (std::size_t k = 1; k <= n + 1; ++k) {
      auto recs = recommend(s, h, k);
      ASSERT_LE(recs.size(), k);
      ASSERT_LE(recs.size(), n - h.watched().size());
      for (std::size_t i = 0; i < recs.size(); ++i) {
        ASSERT_GT(recs[i].score, 0.0);
        ASSERT_FALSE(h.contains(recs[i].video_id));
        if (i > 0) {
          const double prev = ranking_key(recs[i - 1].score), cur = ranking_key(recs[i].score);
          ASSERT_TRUE(prev > cur || (prev == cur && recs[i - 1].video_id < recs[i].video_id));
        }
      }
      ASSERT_TRUE(std::equal(previous.begin(), previous.end(), recs.begin()));
      previous = recs;
    }

    const double alpha = alpha_dist(rng);
    std::vector<SparseVector> scaled;
    for (const auto& v : vectors) scaled.push_back(v.empty() ? v : v.scaled(alpha));
    auto base = recommend(s, h, n);
    auto other = recommend(similarity_matrix(scaled), h, n);
    std::vector<VideoId> base_ids, other_ids;
    for (const auto& r : base) base_ids.push_back(r.video_id);
    for (const auto& r : other) other_ids.push_back(r.video_id);
    std::ostringstream scores;
    scores.precision(17);
    for (const auto& r : base) scores << r.video_id << ":" << r.score << " ";
    scores << "| ";
    for (const auto& r : other) scores << r.video_id << ":" << r.score << " ";
    ASSERT_EQ(base_ids, other_ids) << "alpha " << alpha << "\n" << scores.str();
  }
}

}  // namespace
}  // namespace vidrec
