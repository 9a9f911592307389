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

#include "vidrec/vectorizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "vidrec/error.hpp"

namespace vidrec {

namespace {

double tfidf_weight(std::uint64_t count, std::uint64_t length, double idf) {
  return static_cast<double>(count) / static_cast<double>(length) * idf;
}

std::vector<std::uint64_t> document_frequencies(
    const std::vector<TermCounts>& counts, std::size_t vocabulary_size) {
  std::vector<std::uint64_t> df(vocabulary_size, 0);
  for (const auto& doc : counts) {
    for (const auto& [term, count] : doc) ++df[term];
  }
  return df;
}

std::vector<double> idf_table(const std::vector<std::uint64_t>& df,
                              std::uint64_t doc_count) {
  std::vector<double> idf(df.size());
  for (std::size_t t = 0; t < df.size(); ++t) idf[t] = idf_value(doc_count, df[t]);
  return idf;
}

SparseVector weigh(const TermCounts& counts, std::uint64_t length,
                   const std::vector<double>& idf) {
  std::vector<SparseEntry> entries;
  entries.reserve(counts.size());
  for (const auto& [term, count] : counts) {
    entries.push_back({term, tfidf_weight(count, length, idf[term])});
  }
  return SparseVector::from_entries(std::move(entries));
}

}  // namespace

// -- Vocabulary ----------------------------------------------------------

Vocabulary::Vocabulary(std::vector<std::string> terms) : terms_(std::move(terms)) {
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!index_.emplace(terms_[i], static_cast<TermIndex>(i)).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vocabulary term repeated: '" + terms_[i] + "'");
    }
  }
}

std::optional<TermIndex> Vocabulary::index_of(std::string_view term) const {
  auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vocabulary build_vocabulary(std::span<const Document> corpus) {
  std::vector<std::string> terms;
  std::unordered_map<std::string_view, bool> seen;
  for (const auto& doc : corpus) {
    for (const auto& token : doc.tokens) {
      if (seen.emplace(token, true).second) terms.push_back(token);
    }
  }
  if (terms.empty()) {
    throw Error(ErrorCode::kEmptyVocabulary,
                corpus.empty() ? "corpus has no documents"
                               : "every document is empty after cleaning");
  }
  return Vocabulary(std::move(terms));
}

// -- free TF helpers -----------------------------------------------------

TermFrequencyRatio term_frequency_ratio(std::string_view term,
                                        const Document& doc) {
  TermFrequencyRatio r;
  r.length = doc.tokens.size();
  r.count = static_cast<std::uint64_t>(
      std::count(doc.tokens.begin(), doc.tokens.end(), term));
  return r;
}

double term_frequency(std::string_view term, const Document& doc) {
  return term_frequency_ratio(term, doc).value();
}

double idf_value(std::uint64_t doc_count, std::uint64_t doc_freq) {
  return std::log10(static_cast<double>(doc_count) /
                    static_cast<double>(doc_freq));
}

// -- TfIdfModel ----------------------------------------------------------

const SparseVector& TfIdfModel::vector_of(VideoId video) const {
  if (video >= vectors_.size()) {
    throw Error(ErrorCode::kUnknownVideo,
                "video id " + std::to_string(video) + " out of range [0, " +
                    std::to_string(vectors_.size()) + ")");
  }
  return vectors_[video];
}

double TfIdfModel::inverse_document_frequency(TermIndex term) const {
  if (term >= doc_freq_.size()) {
    throw Error(ErrorCode::kUnknownTerm,
                "term index " + std::to_string(term) + " not in vocabulary");
  }
  return idf_value(doc_count(), doc_freq_[term]);
}

double TfIdfModel::inverse_document_frequency(std::string_view term) const {
  auto index = vocabulary_.index_of(term);
  if (!index) {
    throw Error(ErrorCode::kUnknownTerm,
                "term '" + std::string(term) + "' not in vocabulary");
  }
  return inverse_document_frequency(*index);
}

TermFrequencyRatio TfIdfModel::term_frequency_ratio(std::string_view term,
                                                    VideoId video) const {
  if (video >= doc_lengths_.size()) {
    throw Error(ErrorCode::kUnknownVideo,
                "video id " + std::to_string(video) + " out of range");
  }
  TermFrequencyRatio r{0, doc_lengths_[video]};
  auto index = vocabulary_.index_of(term);
  if (!index) return r;
  const auto& counts = term_counts_[video];
  auto it = std::lower_bound(
      counts.begin(), counts.end(), *index,
      [](const auto& entry, TermIndex t) { return entry.first < t; });
  if (it != counts.end() && it->first == *index) r.count = it->second;
  return r;
}

bool TfIdfModel::operator==(const TfIdfModel& other) const {
  return vocabulary_ == other.vocabulary_ &&
         doc_lengths_ == other.doc_lengths_ && doc_freq_ == other.doc_freq_ &&
         term_counts_ == other.term_counts_ && vectors_ == other.vectors_;
}

TfIdfModel TfIdfModel::from_parts(Vocabulary vocabulary,
                                  std::vector<std::uint64_t> doc_lengths,
                                  std::vector<std::uint64_t> doc_freq,
                                  std::vector<TermCounts> term_counts,
                                  std::vector<SparseVector> vectors) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kFormat, "inconsistent model: " + what);
  };
  const std::size_t n = doc_lengths.size();
  if (n == 0) fail("no documents");
  if (doc_freq.size() != vocabulary.size()) fail("doc_freq size != vocabulary size");
  if (term_counts.size() != n) fail("term_counts size != doc_count");
  if (vectors.size() != n) fail("vectors size != doc_count");

  std::vector<std::uint64_t> recount(vocabulary.size(), 0);
  for (std::size_t d = 0; d < n; ++d) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < term_counts[d].size(); ++i) {
      auto [term, count] = term_counts[d][i];
      if (term >= vocabulary.size()) fail("term index out of range");
      if (count == 0) fail("zero term count");
      if (i > 0 && term_counts[d][i - 1].first >= term) fail("unsorted term counts");
      total += count;
      ++recount[term];
    }
    if (total != doc_lengths[d]) fail("term counts do not sum to doc length");
    for (const auto& e : vectors[d].entries()) {
      if (e.index >= vocabulary.size()) fail("vector index out of range");
    }
  }
  if (recount != doc_freq) fail("doc_freq disagrees with term counts");
  for (auto df : doc_freq) {
    if (df < 1 || df > n) fail("doc_freq outside [1, doc_count]");
  }

  TfIdfModel model;
  model.vocabulary_ = std::move(vocabulary);
  model.doc_lengths_ = std::move(doc_lengths);
  model.doc_freq_ = std::move(doc_freq);
  model.term_counts_ = std::move(term_counts);
  model.vectors_ = std::move(vectors);
  return model;
}

// -- fitting -------------------------------------------------------------

TfIdfModel fit(std::span<const Document> corpus) {
  TfIdfModel model;
  model.vocabulary_ = build_vocabulary(corpus);
  const auto n = static_cast<std::ptrdiff_t>(corpus.size());
  model.doc_lengths_.resize(corpus.size());
  model.term_counts_.resize(corpus.size());

  // Sort each document's term indices and run-length encode them.
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t d = 0; d < n; ++d) {
    const auto& tokens = corpus[d].tokens;
    std::vector<TermIndex> ids;
    ids.reserve(tokens.size());
    for (const auto& token : tokens) ids.push_back(*model.vocabulary_.index_of(token));
    std::sort(ids.begin(), ids.end());
    TermCounts& counts = model.term_counts_[d];
    for (std::size_t i = 0; i < ids.size();) {
      std::size_t j = i;
      while (j < ids.size() && ids[j] == ids[i]) ++j;
      counts.emplace_back(ids[i], static_cast<std::uint32_t>(j - i));
      i = j;
    }
    model.doc_lengths_[d] = tokens.size();
  }

  model.doc_freq_ = document_frequencies(model.term_counts_, model.vocabulary_.size());
  const auto idf = idf_table(model.doc_freq_, corpus.size());

  model.vectors_.resize(corpus.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t d = 0; d < n; ++d) {
    model.vectors_[d] = weigh(model.term_counts_[d], model.doc_lengths_[d], idf);
  }
  return model;
}

TfIdfModel fit_serial(std::span<const Document> corpus) {
  TfIdfModel model;
  model.vocabulary_ = build_vocabulary(corpus);
  for (const auto& doc : corpus) {
    std::map<TermIndex, std::uint32_t> counts;
    for (const auto& token : doc.tokens) ++counts[*model.vocabulary_.index_of(token)];
    model.term_counts_.emplace_back(counts.begin(), counts.end());
    model.doc_lengths_.push_back(doc.tokens.size());
  }
  model.doc_freq_ = document_frequencies(model.term_counts_, model.vocabulary_.size());
  const auto idf = idf_table(model.doc_freq_, corpus.size());
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    model.vectors_.push_back(weigh(model.term_counts_[d], model.doc_lengths_[d], idf));
  }
  return model;
}

}  // namespace vidrec
