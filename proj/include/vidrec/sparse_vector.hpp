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
#include <span>
#include <vector>

namespace vidrec {

using TermIndex = std::uint32_t;

struct SparseEntry {
  TermIndex index;
  double weight;

  bool operator==(const SparseEntry&) const = default;
};

/// Non-negative weights keyed by term index. Entries are strictly ascending
/// by index and never hold a zero weight, so equal vectors compare equal.
class SparseVector {
 public:
  SparseVector() = default;

  /// Sorts, rejects duplicate indices or negative/non-finite weights, and
  /// discards zeros. Throws Error(kInvalidArgument).
  static SparseVector from_entries(std::vector<SparseEntry> entries);

  std::span<const SparseEntry> entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Weight at `index`, 0 if absent.
  double at(TermIndex index) const;

  std::vector<double> to_dense(std::size_t dimension) const;

  /// Euclidean norm, summing squares in ascending index order.
  double norm() const;

  /// Every weight multiplied by `factor` (> 0).
  SparseVector scaled(double factor) const;

  bool operator==(const SparseVector&) const = default;

 private:
  std::vector<SparseEntry> entries_;
};

/// Sum of products over the common support, accumulated in ascending index
/// order. Walks the smaller vector and binary-searches the larger, so the
/// result is bit-identical for dot(a, b) and dot(b, a).
double dot(const SparseVector& a, const SparseVector& b);

}  // namespace vidrec
