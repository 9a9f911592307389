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
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vidrec/catalog.hpp"
#include "vidrec/sparse_vector.hpp"

namespace vidrec {

/// Unique terms in first-occurrence order (documents in catalog order,
/// tokens in document order).
class Vocabulary {
 public:
  Vocabulary() = default;
  /// Throws Error(kInvalidArgument) on a repeated term.
  explicit Vocabulary(std::vector<std::string> terms);

  std::size_t size() const { return terms_.size(); }
  const std::vector<std::string>& terms() const { return terms_; }
  const std::string& term(TermIndex index) const { return terms_.at(index); }
  std::optional<TermIndex> index_of(std::string_view term) const;

  bool operator==(const Vocabulary& other) const {
    return terms_ == other.terms_;
  }

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, TermIndex> index_;
};

/// Unreduced count / length, e.g. 2/4 for romance in Titanic.
struct TermFrequencyRatio {
  std::uint64_t count = 0;
  std::uint64_t length = 0;

  double value() const {
    return length == 0 ? 0.0
                       : static_cast<double>(count) /
                             static_cast<double>(length);
  }
  bool operator==(const TermFrequencyRatio&) const = default;
};

/// Per-document term counts, ascending by term index.
using TermCounts = std::vector<std::pair<TermIndex, std::uint32_t>>;

/// Fitted vocabulary, corpus statistics and per-video TF-IDF vectors.
///
/// weights[d][t] = count(t, d) / len(d) * log10(N / df[t]). Terms present in
/// every document get IDF 0 and are therefore absent from every vector.
class TfIdfModel {
 public:
  TfIdfModel() = default;

  /// Rebuilds a model from persisted parts, recomputing nothing but
  /// validating every invariant (df range, counts vs lengths, weights
  /// non-negative). Throws Error(kFormat).
  static TfIdfModel from_parts(Vocabulary vocabulary,
                               std::vector<std::uint64_t> doc_lengths,
                               std::vector<std::uint64_t> doc_freq,
                               std::vector<TermCounts> term_counts,
                               std::vector<SparseVector> vectors);

  const Vocabulary& vocabulary() const { return vocabulary_; }
  std::size_t doc_count() const { return doc_lengths_.size(); }
  const std::vector<std::uint64_t>& doc_lengths() const { return doc_lengths_; }
  const std::vector<std::uint64_t>& doc_freq() const { return doc_freq_; }
  const std::vector<TermCounts>& term_counts() const { return term_counts_; }
  const std::vector<SparseVector>& vectors() const { return vectors_; }

  /// Throws Error(kUnknownVideo) for an out-of-range id.
  const SparseVector& vector_of(VideoId video) const;

  /// log10(N / df). Throws Error(kUnknownTerm) if the term is not in the
  /// vocabulary.
  double inverse_document_frequency(std::string_view term) const;
  double inverse_document_frequency(TermIndex term) const;

  /// 0/0 for an empty document, whose TF is defined as 0 everywhere.
  TermFrequencyRatio term_frequency_ratio(std::string_view term,
                                          VideoId video) const;
  double term_frequency(std::string_view term, VideoId video) const {
    return term_frequency_ratio(term, video).value();
  }

  bool operator==(const TfIdfModel& other) const;

 private:
  friend TfIdfModel fit(std::span<const Document> corpus);
  friend TfIdfModel fit_serial(std::span<const Document> corpus);

  Vocabulary vocabulary_;
  std::vector<std::uint64_t> doc_lengths_;
  std::vector<std::uint64_t> doc_freq_;
  std::vector<TermCounts> term_counts_;
  std::vector<SparseVector> vectors_;
};

/// Throws Error(kEmptyVocabulary) when the corpus is empty or every document
/// has no tokens.
Vocabulary build_vocabulary(std::span<const Document> corpus);

/// count(term) / len(doc); 0 for an empty document.
double term_frequency(std::string_view term, const Document& doc);
TermFrequencyRatio term_frequency_ratio(std::string_view term,
                                        const Document& doc);

/// The one IDF formula used everywhere: log10(doc_count / doc_freq).
double idf_value(std::uint64_t doc_count, std::uint64_t doc_freq);

/// OpenMP-parallel over documents for counting and weighting.
TfIdfModel fit(std::span<const Document> corpus);

/// Single-threaded reference used by tests and the benchmark.
TfIdfModel fit_serial(std::span<const Document> corpus);

}  // namespace vidrec
