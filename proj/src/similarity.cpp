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

#include "vidrec/similarity.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vidrec/csv.hpp"
#include "vidrec/error.hpp"

namespace vidrec {

namespace {

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

double cosine_from_parts(double dot_product, double norm_a, double norm_b) {
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  return clamp_unit(dot_product / (norm_a * norm_b));
}

struct Posting {
  std::size_t doc;
  double weight;
};

}  // namespace

double cosine(const SparseVector& a, const SparseVector& b) {
  return cosine_from_parts(dot(a, b), a.norm(), b.norm());
}

std::size_t SimilarityMatrix::slot(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) {
    throw Error(ErrorCode::kUnknownVideo,
                "matrix index (" + std::to_string(i) + ", " +
                    std::to_string(j) + ") outside " + std::to_string(n_));
  }
  return slot_unchecked(i, j);
}

std::vector<double> SimilarityMatrix::row(std::size_t i) const {
  std::vector<double> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = at(i, j);
  return out;
}

SimilarityMatrix similarity_matrix(const TfIdfModel& model) {
  return similarity_matrix(model.vectors());
}

SimilarityMatrix similarity_matrix(std::span<const SparseVector> vectors) {
  const std::size_t n = vectors.size();
  SimilarityMatrix matrix(n);

  std::vector<double> norms(n);
  TermIndex max_term = 0;
  for (std::size_t i = 0; i < n; ++i) {
    norms[i] = vectors[i].norm();
    if (!vectors[i].empty()) {
      max_term = std::max(max_term, vectors[i].entries().back().index);
    }
  }

  // postings[t] lists (doc, weight) in ascending doc order.
  std::vector<std::vector<Posting>> postings(n == 0 ? 0 : max_term + 1);
  for (std::size_t d = 0; d < n; ++d) {
    for (const auto& e : vectors[d].entries()) postings[e.index].push_back({d, e.weight});
  }

  // Row i accumulates dot products with every j < i. Terms of row i are
  // visited in ascending index order, so each pair's sum is built in the
  // same order dot() uses and the cells match cosine() bit for bit.
#pragma omp parallel
  {
    std::vector<double> acc(n, 0.0);
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> touched;
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
      const auto i = static_cast<std::size_t>(si);
      for (const auto& e : vectors[i].entries()) {
        for (const Posting& p : postings[e.index]) {
          if (p.doc >= i) break;
          if (!seen[p.doc]) {
            seen[p.doc] = 1;
            touched.push_back(p.doc);
          }
          acc[p.doc] += e.weight * p.weight;
        }
      }
      for (std::size_t j : touched) {
        matrix.set(i, j, cosine_from_parts(acc[j], norms[i], norms[j]));
        acc[j] = 0.0;
        seen[j] = 0;
      }
      touched.clear();
      matrix.set(i, i, norms[i] > 0.0 ? 1.0 : 0.0);
    }
  }
  return matrix;
}

SimilarityMatrix similarity_matrix_serial(std::span<const SparseVector> vectors) {
  const std::size_t n = vectors.size();
  SimilarityMatrix matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    matrix.set(i, i, vectors[i].norm() > 0.0 ? 1.0 : 0.0);
    for (std::size_t j = 0; j < i; ++j) {
      matrix.set(i, j, cosine(vectors[i], vectors[j]));
    }
  }
  return matrix;
}

void write_matrix_csv(const SimilarityMatrix& matrix,
                      std::span<const std::string> labels, std::ostream& out) {
  if (labels.size() != matrix.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(labels.size()) + " labels for a " +
                    std::to_string(matrix.size()) + "-video matrix");
  }
  out << "title";
  for (const auto& label : labels) out << ',' << csv::escape_field(label);
  out << '\n';
  char buf[32];
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out << csv::escape_field(labels[i]);
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.6f", matrix.at(i, j));
      out << ',' << buf;
    }
    out << '\n';
  }
}

std::string matrix_csv(const SimilarityMatrix& matrix,
                       std::span<const std::string> labels) {
  std::ostringstream out;
  write_matrix_csv(matrix, labels, out);
  return out.str();
}

void export_matrix(const SimilarityMatrix& matrix,
                   std::span<const std::string> labels,
                   const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot write " + destination.string());
  }
  write_matrix_csv(matrix, labels, out);
  out.flush();
  if (!out) {
    throw Error(ErrorCode::kIo, "write failed for " + destination.string());
  }
}

LabeledMatrix parse_matrix_csv(std::istream& in) {
  auto rows = csv::parse_all(in);
  if (rows.empty() || rows[0].empty() || rows[0][0] != "title") {
    throw Error(ErrorCode::kFormat, "matrix export must start with 'title'");
  }
  LabeledMatrix m;
  m.labels.assign(rows[0].begin() + 1, rows[0].end());
  const std::size_t n = m.labels.size();
  if (rows.size() != n + 1) {
    throw Error(ErrorCode::kFormat, "expected " + std::to_string(n) +
                                        " data rows, found " +
                                        std::to_string(rows.size() - 1));
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != n + 1 || rows[r][0] != m.labels[r - 1]) {
      throw Error(ErrorCode::kFormat,
                  "matrix row " + std::to_string(r) + " is malformed");
    }
    std::vector<double> values(n);
    for (std::size_t c = 0; c < n; ++c) {
      const std::string& cell = rows[r][c + 1];
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), values[c]);
      if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw Error(ErrorCode::kFormat, "non-numeric matrix cell '" + cell + "'");
      }
    }
    m.values.push_back(std::move(values));
  }
  return m;
}

}  // namespace vidrec
