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

#include "vidrec/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "vidrec/error.hpp"

namespace vidrec {

namespace {

std::vector<VideoId> sorted_unique(std::span<const VideoId> ids) {
  std::vector<VideoId> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains(const std::vector<VideoId>& sorted, VideoId id) {
  return std::binary_search(sorted.begin(), sorted.end(), id);
}

Metric ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

ConfusionMatrix build_confusion(std::span<const VideoId> recommended,
                                std::span<const VideoId> interested,
                                std::span<const VideoId> universe) {
  const auto u = sorted_unique(universe);
  if (u.empty()) throw Error(ErrorCode::kInvalidArgument, "empty universe");
  const auto rec = sorted_unique(recommended);
  const auto liked = sorted_unique(interested);
  for (const auto* set : {&rec, &liked}) {
    for (VideoId id : *set) {
      if (!contains(u, id)) {
        throw Error(ErrorCode::kPrecondition,
                    "id " + std::to_string(id) + " is outside the universe");
      }
    }
  }

  ConfusionMatrix cm;
  for (VideoId id : u) {
    const bool r = contains(rec, id);
    const bool i = contains(liked, id);
    if (r && i) ++cm.tp;
    else if (r) ++cm.fp;
    else if (i) ++cm.fn;
    else ++cm.tn;
  }
  return cm;
}

Metric precision(const ConfusionMatrix& cm) { return ratio(cm.tp, cm.tp + cm.fp); }

Metric recall(const ConfusionMatrix& cm) { return ratio(cm.tp, cm.tp + cm.fn); }

Metric f1(const ConfusionMatrix& cm) {
  const Metric p = precision(cm);
  const Metric r = recall(cm);
  if (!p || !r) return std::nullopt;
  if (*p + *r == 0.0) return 0.0;
  return 2.0 * *p * *r / (*p + *r);
}

EvalReport evaluate(const ConfusionMatrix& cm) {
  if (cm.total() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "confusion matrix has no outcomes");
  }
  return {precision(cm), recall(cm), f1(cm)};
}

std::string format_metric(const Metric& metric) {
  if (!metric) return "undefined";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", *metric);
  return buf;
}

std::string format_report(const EvalReport& report) {
  return "precision " + format_metric(report.precision) + "\nrecall " +
         format_metric(report.recall) + "\nf1 " + format_metric(report.f1) +
         "\n";
}

}  // namespace vidrec
