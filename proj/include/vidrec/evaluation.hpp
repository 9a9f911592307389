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

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "vidrec/catalog.hpp"

namespace vidrec {

/// Recommended-vs-interested outcome counts for one user.
struct ConfusionMatrix {
  std::uint64_t tp = 0;
  std::uint64_t fn = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;

  std::uint64_t total() const { return tp + fn + fp + tn; }
  bool operator==(const ConfusionMatrix&) const = default;
};

/// nullopt marks an undefined metric (zero denominator).
using Metric = std::optional<double>;

struct EvalReport {
  Metric precision;
  Metric recall;
  Metric f1;
};

/// Throws Error(kInvalidArgument) for an empty universe and
/// Error(kPrecondition) if either set has ids outside it. Duplicate ids count
/// once.
ConfusionMatrix build_confusion(std::span<const VideoId> recommended,
                                std::span<const VideoId> interested,
                                std::span<const VideoId> universe);

Metric precision(const ConfusionMatrix& cm);
Metric recall(const ConfusionMatrix& cm);
/// Harmonic mean of unrounded precision and recall; 0 when both are 0.
Metric f1(const ConfusionMatrix& cm);

/// Throws Error(kInvalidArgument) when every count is zero.
EvalReport evaluate(const ConfusionMatrix& cm);

/// "precision 0.90909\nrecall 0.83333\nf1 0.86957\n"; undefined metrics
/// print as "undefined".
std::string format_report(const EvalReport& report);

std::string format_metric(const Metric& metric);

}  // namespace vidrec
