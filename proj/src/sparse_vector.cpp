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

#include "vidrec/sparse_vector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vidrec/error.hpp"

namespace vidrec {

SparseVector SparseVector::from_entries(std::vector<SparseEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const SparseEntry& a, const SparseEntry& b) {
              return a.index < b.index;
            });
  SparseVector v;
  v.entries_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sparse weight at index " + std::to_string(e.index) +
                      " must be finite and non-negative");
    }
    if (i > 0 && entries[i - 1].index == e.index) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate sparse index " + std::to_string(e.index));
    }
    if (e.weight != 0.0) v.entries_.push_back(e);
  }
  return v;
}

double SparseVector::at(TermIndex index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const SparseEntry& e, TermIndex i) { return e.index < i; });
  return (it != entries_.end() && it->index == index) ? it->weight : 0.0;
}

std::vector<double> SparseVector::to_dense(std::size_t dimension) const {
  std::vector<double> dense(dimension, 0.0);
  for (const auto& e : entries_) {
    if (e.index >= dimension) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sparse index " + std::to_string(e.index) +
                      " outside dimension " + std::to_string(dimension));
    }
    dense[e.index] = e.weight;
  }
  return dense;
}

double SparseVector::norm() const {
  double sum = 0.0;
  for (const auto& e : entries_) sum += e.weight * e.weight;
  return std::sqrt(sum);
}

SparseVector SparseVector::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw Error(ErrorCode::kInvalidArgument, "scale factor must be positive");
  }
  SparseVector out = *this;
  for (auto& e : out.entries_) e.weight *= factor;
  return out;
}

double dot(const SparseVector& a, const SparseVector& b) {
  const SparseVector& small = a.nnz() <= b.nnz() ? a : b;
  const SparseVector& large = a.nnz() <= b.nnz() ? b : a;
  auto large_entries = large.entries();
  auto cursor = large_entries.begin();
  double sum = 0.0;
  for (const auto& e : small.entries()) {
    cursor = std::lower_bound(
        cursor, large_entries.end(), e.index,
        [](const SparseEntry& x, TermIndex i) { return x.index < i; });
    if (cursor == large_entries.end()) break;
    if (cursor->index == e.index) sum += e.weight * cursor->weight;
  }
  return sum;
}

}  // namespace vidrec
