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
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vidrec/catalog.hpp"
#include "vidrec/recommender.hpp"
#include "vidrec/similarity.hpp"
#include "vidrec/vectorizer.hpp"

namespace vidrec {

inline constexpr int kIndexFormatVersion = 1;

/// Pipeline settings. Empty paths select the builtin stopword and collapse
/// lists, which together reproduce the five-video sample corpus.
struct EngineConfig {
  std::filesystem::path stopword_path;
  std::filesystem::path collapse_list_path;
  Aggregation aggregation = Aggregation::kMax;

  /// JSON object with optional keys stopword_path, collapse_list_path,
  /// aggregation ("max" | "mean"), idf_base (must be 10) and tie_break
  /// (must be "catalog-ordinal"). Relative paths resolve against the config
  /// file's directory. Throws Error(kFormat) or Error(kIo).
  static EngineConfig from_file(const std::filesystem::path& path);
  static EngineConfig parse(std::istream& in,
                            const std::filesystem::path& base_dir = {});

  TextPreprocessor make_preprocessor() const;
};

/// A fitted model plus the titles it was built from; what an index file holds.
struct ModelIndex {
  TfIdfModel model;
  std::vector<std::string> titles;
};

ModelIndex build_index(const Catalog& catalog);

/// Canonical text form: a JSON object with keys in sorted order, one
/// document per line inside the nested arrays, weights with 17 significant
/// digits. Identical models always serialize to identical bytes.
void save_index(const ModelIndex& index, std::ostream& out);
void save_index(const ModelIndex& index, const std::filesystem::path& path);
std::string index_text(const ModelIndex& index);

/// Throws Error(kFormat) on a version mismatch or any broken invariant and
/// Error(kIo) if the file cannot be read.
ModelIndex load_index(std::istream& in);
ModelIndex load_index(const std::filesystem::path& path);

/// Read-only query surface shared by the CLI and the HTTP service; the
/// similarity matrix is computed once at construction.
class QueryEngine {
 public:
  explicit QueryEngine(ModelIndex index, Aggregation aggregation = Aggregation::kMax);

  std::size_t size() const { return index_.titles.size(); }
  const std::vector<std::string>& titles() const { return index_.titles; }
  const TfIdfModel& model() const { return index_.model; }
  const SimilarityMatrix& matrix() const { return matrix_; }
  Aggregation aggregation() const { return aggregation_; }

  std::optional<VideoId> find_title(std::string_view title) const;

  /// Titles starting with `prefix`, in catalog order.
  std::vector<std::string> titles_with_prefix(std::string_view prefix) const;

  /// Recommendations for a single-title history. Throws Error(kUnknownVideo)
  /// naming any prefix matches when the title is absent.
  std::vector<Recommendation> similar(std::string_view title, std::size_t k) const;

  /// Throws Error(kUnknownVideo) for an id outside the catalog.
  std::vector<Recommendation> recommend(std::span<const VideoId> watched,
                                        std::size_t k) const;

  std::string matrix_csv() const;

 private:
  ModelIndex index_;
  SimilarityMatrix matrix_;
  Aggregation aggregation_;
  std::unordered_map<std::string, VideoId> by_title_;
};

}  // namespace vidrec
