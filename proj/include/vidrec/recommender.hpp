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

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vidrec/catalog.hpp"
#include "vidrec/similarity.hpp"

namespace vidrec {

/// How a candidate's similarities to several watched videos combine.
enum class Aggregation { kMax, kMean };

std::string_view aggregation_name(Aggregation aggregation);
std::optional<Aggregation> parse_aggregation(std::string_view name);

/// Watched or searched videos for one user, deduplicated in first-seen order.
class WatchHistory {
 public:
  WatchHistory() = default;

  /// Throws Error(kUnknownVideo) if any id is >= catalog_size.
  WatchHistory(std::string user_id, std::span<const VideoId> watched,
               std::size_t catalog_size);

  const std::string& user_id() const { return user_id_; }
  const std::vector<VideoId>& watched() const { return watched_; }
  bool empty() const { return watched_.empty(); }
  bool contains(VideoId video) const;

 private:
  std::string user_id_;
  std::vector<VideoId> watched_;
};

struct Recommendation {
  VideoId video_id;
  double score;

  bool operator==(const Recommendation&) const = default;
};

/// Max (or mean) of matrix[w][candidate] over watched w. Throws
/// Error(kPrecondition) if the history is empty or already holds the
/// candidate.
double score_candidate(const SimilarityMatrix& matrix,
                       const WatchHistory& history, VideoId candidate,
                       Aggregation aggregation = Aggregation::kMax);

/// `score` rounded to 40 significant bits. Ranking compares these keys so
/// scores that differ only by floating-point rounding count as ties.
double ranking_key(double score);

/// Unwatched videos with score > 0, highest ranking_key first, ties by
/// ascending id, at most k. Throws Error(kInvalidArgument) for k == 0.
std::vector<Recommendation> recommend(const SimilarityMatrix& matrix,
                                      const WatchHistory& history,
                                      std::size_t k,
                                      Aggregation aggregation = Aggregation::kMax);

}  // namespace vidrec
