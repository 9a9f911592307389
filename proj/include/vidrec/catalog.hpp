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

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vidrec {

using VideoId = std::size_t;

struct VideoRecord {
  VideoId id = 0;
  std::string title;
  std::string genre;
  std::string cast;
  std::string overview;
};

struct Document {
  VideoId video_id = 0;
  std::vector<std::string> tokens;

  bool empty() const { return tokens.empty(); }
  std::size_t size() const { return tokens.size(); }
};

/// Records and their documents, index-aligned. Immutable once loaded.
struct Catalog {
  std::vector<VideoRecord> records;
  std::vector<Document> documents;
  std::size_t dropped_rows = 0;
  std::vector<std::string> warnings;

  std::size_t size() const { return records.size(); }
  std::vector<std::string> titles() const;
};

class StopwordSet {
 public:
  StopwordSet() = default;
  explicit StopwordSet(std::set<std::string> words) : words_(std::move(words)) {}

  /// One word per line; blank lines and '#' comments are skipped. Words are
  /// normalized the same way tokens are.
  static StopwordSet parse(std::istream& in);
  static StopwordSet from_file(const std::filesystem::path& path);
  static StopwordSet builtin_english();

  bool contains(std::string_view token) const {
    return words_.find(std::string(token)) != words_.end();
  }
  std::size_t size() const { return words_.size(); }

 private:
  std::set<std::string> words_;
};

/// Phrase -> token mapping applied to whole comma-separated phrases before
/// the per-field splitting rule. An empty token drops the phrase.
class CollapseList {
 public:
  CollapseList() = default;
  explicit CollapseList(std::map<std::string, std::string> entries);

  /// "source phrase<TAB>token" per line; '#' comments and blank lines are
  /// skipped. Throws Error(kFormat) on a line without a tab.
  static CollapseList parse(std::istream& in);
  static CollapseList from_file(const std::filesystem::path& path);
  static CollapseList builtin_sample();

  const std::string* find(std::string_view normalized_phrase) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

/// Lowercases ASCII letters, maps whitespace runs to one space, drops every
/// other non-alphanumeric byte (including non-ASCII), and trims.
std::string normalize_phrase(std::string_view text);

/// Splits on commas; empty phrases are kept at this stage.
std::vector<std::string_view> split_phrases(std::string_view field);

class TextPreprocessor {
 public:
  TextPreprocessor() = default;
  TextPreprocessor(StopwordSet stopwords, CollapseList collapse)
      : stopwords_(std::move(stopwords)), collapse_(std::move(collapse)) {}

  /// Builtin English stopwords plus the sample collapse list.
  static TextPreprocessor defaults();

  /// Tokens in genre, cast, overview order. Cast phrases become one token
  /// per person; genre and overview phrases split into words unless the
  /// collapse list names them.
  Document preprocess(const VideoRecord& record) const;

  const StopwordSet& stopwords() const { return stopwords_; }
  const CollapseList& collapse_list() const { return collapse_; }

 private:
  enum class Field { kGenre, kCast, kOverview };
  void append_field(std::string_view text, Field field,
                    std::vector<std::string>& out) const;
  void emit(std::string token, std::vector<std::string>& out) const;

  StopwordSet stopwords_;
  CollapseList collapse_;
};

struct CorpusResult {
  std::vector<Document> documents;
  std::vector<std::string> warnings;
};

Document preprocess_record(const VideoRecord& record,
                           const TextPreprocessor& preprocessor);

/// Document per record, same order. Empty documents are kept and produce a
/// warning naming the title.
CorpusResult build_corpus(std::span<const VideoRecord> records,
                          const TextPreprocessor& preprocessor);

struct RecordSet {
  std::vector<VideoRecord> records;
  std::size_t dropped_rows = 0;
};

/// Reads the header-bearing CSV, keeps rows with all four features present,
/// assigns ids in surviving order. Columns are matched case-insensitively;
/// "genres" is accepted for "genre".
RecordSet read_records(std::istream& in);

Catalog load_catalog(std::istream& in, const TextPreprocessor& preprocessor);
Catalog load_catalog(const std::filesystem::path& path,
                     const TextPreprocessor& preprocessor);

}  // namespace vidrec
