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

#include "vidrec/recommender.hpp"

#include <algorithm>
#include <cmath>

#include "vidrec/error.hpp"

namespace vidrec {

std::string_view aggregation_name(Aggregation aggregation) {
  return aggregation == Aggregation::kMax ? "max" : "mean";
}

std::optional<Aggregation> parse_aggregation(std::string_view name) {
  if (name == "max") return Aggregation::kMax;
  if (name == "mean") return Aggregation::kMean;
  return std::nullopt;
}

WatchHistory::WatchHistory(std::string user_id, std::span<const VideoId> watched,
                           std::size_t catalog_size)
    : user_id_(std::move(user_id)) {
  for (VideoId id : watched) {
    if (id >= catalog_size) {
      throw Error(ErrorCode::kUnknownVideo,
                  "watched video id " + std::to_string(id) +
                      " not in catalog of " + std::to_string(catalog_size));
    }
    if (!contains(id)) watched_.push_back(id);
  }
}

bool WatchHistory::contains(VideoId video) const {
  return std::find(watched_.begin(), watched_.end(), video) != watched_.end();
}

double score_candidate(const SimilarityMatrix& matrix,
                       const WatchHistory& history, VideoId candidate,
                       Aggregation aggregation) {
  if (history.empty()) {
    throw Error(ErrorCode::kPrecondition, "cannot score against an empty history");
  }
  if (history.contains(candidate)) {
    throw Error(ErrorCode::kPrecondition,
                "candidate " + std::to_string(candidate) + " is already watched");
  }
  double best = 0.0;
  double sum = 0.0;
  for (VideoId w : history.watched()) {
    double s = matrix.at(w, candidate);
    best = std::max(best, s);
    sum += s;
  }
  if (aggregation == Aggregation::kMax) return best;
  return sum / static_cast<double>(history.watched().size());
}

double ranking_key(double score) {
  if (score == 0.0 || !std::isfinite(score)) return score;
  int exponent = 0;
  const double mantissa = std::frexp(score, &exponent);
  return std::ldexp(std::round(std::ldexp(mantissa, 40)), exponent - 40);
}

std::vector<Recommendation> recommend(const SimilarityMatrix& matrix,
                                      const WatchHistory& history,
                                      std::size_t k, Aggregation aggregation) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  std::vector<Recommendation> out;
  if (history.empty()) return out;

  struct Ranked {
    double key;
    Recommendation rec;
  };
  std::vector<Ranked> ranked;
  for (VideoId c = 0; c < matrix.size(); ++c) {
    if (history.contains(c)) continue;
    double s = score_candidate(matrix, history, c, aggregation);
    if (s > 0.0) ranked.push_back({ranking_key(s), {c, s}});
  }
  auto before = [](const Ranked& a, const Ranked& b) {
    return a.key != b.key ? a.key > b.key : a.rec.video_id < b.rec.video_id;
  };
  const std::size_t keep = std::min(k, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(keep),
                    ranked.end(), before);
  out.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) out.push_back(ranked[i].rec);
  return out;
}

}  // namespace vidrec
