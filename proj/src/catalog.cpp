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

#include "vidrec/catalog.hpp"

#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "vidrec/csv.hpp"
#include "vidrec/default_resources.hpp"
#include "vidrec/error.hpp"

namespace vidrec {

namespace {

bool is_ascii_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string remove_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != ' ') out.push_back(c);
  }
  return out;
}

std::istringstream as_stream(std::string_view text) {
  return std::istringstream(std::string(text));
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  return in;
}

}  // namespace

std::string normalize_phrase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (is_space(c)) {
      pending_space = !out.empty();
    } else if (is_ascii_alnum(c)) {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a')
                                         : c);
    }
  }
  return out;
}

std::vector<std::string_view> split_phrases(std::string_view field) {
  std::vector<std::string_view> phrases;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = field.find(',', start);
    if (comma == std::string_view::npos) {
      phrases.push_back(field.substr(start));
      return phrases;
    }
    phrases.push_back(field.substr(start, comma - start));
    start = comma + 1;
  }
}

std::vector<std::string> Catalog::titles() const {
  std::vector<std::string> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.title);
  return out;
}

// -- StopwordSet ---------------------------------------------------------

StopwordSet StopwordSet::parse(std::istream& in) {
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    std::string word = remove_spaces(normalize_phrase(view));
    if (!word.empty()) words.insert(std::move(word));
  }
  return StopwordSet(std::move(words));
}

StopwordSet StopwordSet::from_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse(in);
}

StopwordSet StopwordSet::builtin_english() {
  auto in = as_stream(resources::kStopwordsEnglish);
  return parse(in);
}

// -- CollapseList --------------------------------------------------------

CollapseList::CollapseList(std::map<std::string, std::string> entries) {
  for (auto& [phrase, token] : entries) {
    entries_.emplace(normalize_phrase(phrase),
                     remove_spaces(normalize_phrase(token)));
  }
}

CollapseList CollapseList::parse(std::istream& in) {
  std::map<std::string, std::string> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view = line;
    if (trim(view).empty() || trim(view).front() == '#') continue;
    std::size_t tab = view.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::kFormat, "collapse list line " +
                                          std::to_string(line_no) +
                                          ": expected 'phrase<TAB>token'");
    }
    std::string phrase = normalize_phrase(view.substr(0, tab));
    if (phrase.empty()) {
      throw Error(ErrorCode::kFormat, "collapse list line " +
                                          std::to_string(line_no) +
                                          ": empty source phrase");
    }
    entries[phrase] = std::string(view.substr(tab + 1));
  }
  return CollapseList(std::move(entries));
}

CollapseList CollapseList::from_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse(in);
}

CollapseList CollapseList::builtin_sample() {
  auto in = as_stream(resources::kSampleCollapseList);
  return parse(in);
}

const std::string* CollapseList::find(std::string_view normalized_phrase) const {
  auto it = entries_.find(normalized_phrase);
  return it == entries_.end() ? nullptr : &it->second;
}

// -- TextPreprocessor ----------------------------------------------------

TextPreprocessor TextPreprocessor::defaults() {
  return TextPreprocessor(StopwordSet::builtin_english(),
                          CollapseList::builtin_sample());
}

void TextPreprocessor::emit(std::string token,
                            std::vector<std::string>& out) const {
  if (token.empty() || stopwords_.contains(token)) return;
  out.push_back(std::move(token));
}

void TextPreprocessor::append_field(std::string_view text, Field field,
                                    std::vector<std::string>& out) const {
  for (std::string_view raw : split_phrases(text)) {
    std::string phrase = normalize_phrase(raw);
    if (phrase.empty()) continue;
    if (const std::string* mapped = collapse_.find(phrase)) {
      emit(*mapped, out);
      continue;
    }
    if (field == Field::kCast) {
      emit(remove_spaces(phrase), out);
      continue;
    }
    std::size_t start = 0;
    while (start < phrase.size()) {
      std::size_t space = phrase.find(' ', start);
      if (space == std::string::npos) space = phrase.size();
      emit(phrase.substr(start, space - start), out);
      start = space + 1;
    }
  }
}

Document TextPreprocessor::preprocess(const VideoRecord& record) const {
  Document doc;
  doc.video_id = record.id;
  append_field(record.genre, Field::kGenre, doc.tokens);
  append_field(record.cast, Field::kCast, doc.tokens);
  append_field(record.overview, Field::kOverview, doc.tokens);
  return doc;
}

Document preprocess_record(const VideoRecord& record,
                           const TextPreprocessor& preprocessor) {
  return preprocessor.preprocess(record);
}

CorpusResult build_corpus(std::span<const VideoRecord> records,
                          const TextPreprocessor& preprocessor) {
  CorpusResult result;
  result.documents.resize(records.size());
  // Records are independent; each iteration writes only its own slot.
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(records.size());
       ++i) {
    result.documents[i] = preprocessor.preprocess(records[i]);
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (result.documents[i].empty()) {
      result.warnings.push_back("video '" + records[i].title +
                                "' has no tokens after cleaning");
    }
  }
  return result;
}

// -- ingestion -----------------------------------------------------------

RecordSet read_records(std::istream& in) {
  csv::Reader reader(in);
  auto header = reader.next();
  if (!header) {
    throw Error(ErrorCode::kSchema, "catalog has no header row");
  }

  enum Column { kTitle, kGenre, kCast, kOverview, kColumnCount };
  constexpr std::array<std::string_view, kColumnCount> kNames = {
      "title", "genre", "cast", "overview"};
  std::array<std::optional<std::size_t>, kColumnCount> position;
  std::optional<std::size_t> genres_alias;
  for (std::size_t i = 0; i < header->size(); ++i) {
    std::string name = lower(trim((*header)[i]));
    for (std::size_t c = 0; c < kColumnCount; ++c) {
      if (name == kNames[c] && !position[c]) position[c] = i;
    }
    if (name == "genres" && !genres_alias) genres_alias = i;
  }
  if (!position[kGenre]) position[kGenre] = genres_alias;

  std::string missing;
  for (std::size_t c = 0; c < kColumnCount; ++c) {
    if (!position[c]) {
      if (!missing.empty()) missing += ", ";
      missing += kNames[c];
    }
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kSchema,
                "catalog header is missing required column(s): " + missing);
  }

  RecordSet result;
  std::unordered_set<std::string> seen_titles;
  while (auto row = reader.next()) {
    // A bare line break between records is not a row.
    if (row->size() == 1 && trim((*row)[0]).empty()) continue;
    if (row->size() > header->size()) {
      throw Error(ErrorCode::kFormat,
                  "line " + std::to_string(reader.record_line()) + ": " +
                      std::to_string(row->size()) + " fields, header has " +
                      std::to_string(header->size()));
    }
    auto field = [&](Column c) -> std::string_view {
      std::size_t p = *position[c];
      return p < row->size() ? trim((*row)[p]) : std::string_view{};
    };
    if (field(kTitle).empty() || field(kGenre).empty() ||
        field(kCast).empty() || field(kOverview).empty()) {
      ++result.dropped_rows;
      continue;
    }
    VideoRecord record;
    record.id = result.records.size();
    record.title = std::string(field(kTitle));
    record.genre = std::string(field(kGenre));
    record.cast = std::string(field(kCast));
    record.overview = std::string(field(kOverview));
    if (!seen_titles.insert(record.title).second) {
      throw Error(ErrorCode::kDuplicateTitle,
                  "duplicate title '" + record.title + "' on line " +
                      std::to_string(reader.record_line()));
    }
    result.records.push_back(std::move(record));
  }

  if (result.records.empty()) {
    throw Error(ErrorCode::kEmptyCatalog,
                "no catalog rows survived null filtering (" +
                    std::to_string(result.dropped_rows) + " dropped)");
  }
  return result;
}

Catalog load_catalog(std::istream& in, const TextPreprocessor& preprocessor) {
  RecordSet set = read_records(in);
  if (set.records.size() < 2) {
    throw Error(ErrorCode::kEmptyCatalog,
                "a catalog needs at least 2 videos, got " +
                    std::to_string(set.records.size()));
  }
  CorpusResult corpus = build_corpus(set.records, preprocessor);
  Catalog catalog;
  catalog.records = std::move(set.records);
  catalog.documents = std::move(corpus.documents);
  catalog.dropped_rows = set.dropped_rows;
  catalog.warnings = std::move(corpus.warnings);
  return catalog;
}

Catalog load_catalog(const std::filesystem::path& path,
                     const TextPreprocessor& preprocessor) {
  auto in = open_or_throw(path);
  return load_catalog(in, preprocessor);
}

}  // namespace vidrec
