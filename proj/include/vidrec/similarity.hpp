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

#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "vidrec/sparse_vector.hpp"
#include "vidrec/vectorizer.hpp"

namespace vidrec {

/// dot / (|a| |b|), clamped to [0, 1]; 0 when either vector is all-zero.
double cosine(const SparseVector& a, const SparseVector& b);

/// Symmetric n x n cosine grid stored as a packed lower triangle, so
/// at(i, j) and at(j, i) read the same cell.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  explicit SimilarityMatrix(std::size_t n)
      : n_(n), cells_(n * (n + 1) / 2, 0.0) {}

  std::size_t size() const { return n_; }

  double at(std::size_t i, std::size_t j) const { return cells_[slot(i, j)]; }
  void set(std::size_t i, std::size_t j, double value) {
    cells_[slot(i, j)] = value;
  }

  std::vector<double> row(std::size_t i) const;

  bool operator==(const SimilarityMatrix&) const = default;

 private:
  static std::size_t slot_unchecked(std::size_t i, std::size_t j) {
    if (i < j) std::swap(i, j);
    return i * (i + 1) / 2 + j;
  }
  std::size_t slot(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  std::vector<double> cells_;
};

/// Parallel over rows, using an inverted term index to visit only pairs that
/// share a term. Cells equal cosine(vector_of(i), vector_of(j)) bit-exactly;
/// the diagonal is exactly 1 for non-empty vectors and 0 otherwise.
SimilarityMatrix similarity_matrix(const TfIdfModel& model);
SimilarityMatrix similarity_matrix(std::span<const SparseVector> vectors);

/// Reference: calls cosine() on every unordered pair, single-threaded.
SimilarityMatrix similarity_matrix_serial(std::span<const SparseVector> vectors);

/// Labeled CSV grid: header "title,<label>...", one row per video, values
/// with 6 decimals. Labels are CSV-quoted when needed.
void write_matrix_csv(const SimilarityMatrix& matrix,
                      std::span<const std::string> labels, std::ostream& out);
std::string matrix_csv(const SimilarityMatrix& matrix,
                       std::span<const std::string> labels);

/// Throws Error(kIo) when the destination cannot be written.
void export_matrix(const SimilarityMatrix& matrix,
                   std::span<const std::string> labels,
                   const std::filesystem::path& destination);

struct LabeledMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> values;
};

/// Inverse of write_matrix_csv. Throws Error(kFormat) on a ragged or
/// non-numeric grid.
LabeledMatrix parse_matrix_csv(std::istream& in);

}  // namespace vidrec
