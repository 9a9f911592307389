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

#include "vidrec/engine.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vidrec/error.hpp"

namespace vidrec {

using nlohmann::json;

namespace {

[[noreturn]] void format_error(const std::string& what) {
  throw Error(ErrorCode::kFormat, what);
}

std::string quoted(const std::string& s) {
  return json(s).dump(-1, ' ', false, json::error_handler_t::replace);
}

std::string exact(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

template <typename T>
void write_flat(std::ostream& out, const std::vector<T>& values) {
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    if constexpr (std::is_same_v<T, std::string>) {
      out << quoted(values[i]);
    } else {
      out << values[i];
    }
  }
  out << ']';
}

template <typename Rows, typename WriteRow>
void write_rows(std::ostream& out, const Rows& rows, WriteRow write_row) {
  out << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << "    ";
    write_row(rows[i]);
    out << (i + 1 < rows.size() ? ",\n" : "\n");
  }
  out << "  ]";
}

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) format_error(std::string("index is missing '") + key + "'");
  return *it;
}

std::vector<std::uint64_t> read_uints(const json& arr, const char* key) {
  if (!arr.is_array()) format_error(std::string("'") + key + "' must be an array");
  std::vector<std::uint64_t> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number_unsigned()) {
      format_error(std::string("'") + key + "' holds a non-integer");
    }
    out.push_back(v.get<std::uint64_t>());
  }
  return out;
}

}  // namespace

// -- EngineConfig ----------------------------------------------------------

EngineConfig EngineConfig::parse(std::istream& in,
                                 const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    format_error(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) format_error("config must be a JSON object");

  EngineConfig config;
  auto path_of = [&](const char* key) -> std::filesystem::path {
    auto it = doc.find(key);
    if (it == doc.end() || it->is_null()) return {};
    if (!it->is_string()) format_error(std::string(key) + " must be a string");
    std::filesystem::path p = it->get<std::string>();
    if (p.empty() || p.is_absolute() || base_dir.empty()) return p;
    return base_dir / p;
  };
  config.stopword_path = path_of("stopword_path");
  config.collapse_list_path = path_of("collapse_list_path");

  for (auto& [key, value] : doc.items()) {
    if (key == "stopword_path" || key == "collapse_list_path") continue;
    if (key == "aggregation") {
      auto agg = value.is_string() ? parse_aggregation(value.get<std::string>())
                                   : std::nullopt;
      if (!agg) format_error("aggregation must be \"max\" or \"mean\"");
      config.aggregation = *agg;
    } else if (key == "idf_base") {
      if (!value.is_number() || value.get<double>() != 10.0) {
        format_error("idf_base is fixed at 10");
      }
    } else if (key == "tie_break") {
      if (value != "catalog-ordinal") format_error("tie_break is fixed at \"catalog-ordinal\"");
    } else {
      format_error("unknown config key '" + key + "'");
    }
  }
  return config;
}

EngineConfig EngineConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open config " + path.string());
  return parse(in, path.parent_path());
}

TextPreprocessor EngineConfig::make_preprocessor() const {
  return TextPreprocessor(
      stopword_path.empty() ? StopwordSet::builtin_english()
                            : StopwordSet::from_file(stopword_path),
      collapse_list_path.empty() ? CollapseList::builtin_sample()
                                 : CollapseList::from_file(collapse_list_path));
}

// -- index persistence -----------------------------------------------------

ModelIndex build_index(const Catalog& catalog) {
  return {fit(catalog.documents), catalog.titles()};
}

void save_index(const ModelIndex& index, std::ostream& out) {
  const TfIdfModel& m = index.model;
  out << "{\n";
  out << "  \"doc_count\": " << m.doc_count() << ",\n";
  out << "  \"doc_freq\": ";
  write_flat(out, m.doc_freq());
  out << ",\n  \"doc_lengths\": ";
  write_flat(out, m.doc_lengths());
  out << ",\n  \"format_version\": " << kIndexFormatVersion << ",\n";
  out << "  \"term_counts\": ";
  write_rows(out, m.term_counts(), [&](const TermCounts& row) {
    out << '[';
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? ",[" : "[") << row[i].first << ',' << row[i].second << ']';
    }
    out << ']';
  });
  out << ",\n  \"titles\": ";
  write_flat(out, index.titles);
  out << ",\n  \"vectors\": ";
  write_rows(out, m.vectors(), [&](const SparseVector& v) {
    out << '[';
    bool first = true;
    for (const auto& e : v.entries()) {
      out << (first ? "[" : ",[") << e.index << ',' << exact(e.weight) << ']';
      first = false;
    }
    out << ']';
  });
  out << ",\n  \"vocabulary\": ";
  write_flat(out, m.vocabulary().terms());
  out << "\n}\n";
}

std::string index_text(const ModelIndex& index) {
  std::ostringstream out;
  save_index(index, out);
  return out.str();
}

void save_index(const ModelIndex& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write index " + path.string());
  save_index(index, out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

ModelIndex load_index(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    format_error(std::string("index is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) format_error("index must be a JSON object");

  const json& version = require(doc, "format_version");
  if (!version.is_number_integer() || version.get<int>() != kIndexFormatVersion) {
    format_error("unsupported index format_version " + version.dump());
  }

  std::vector<std::string> terms;
  for (const auto& t : require(doc, "vocabulary")) {
    if (!t.is_string()) format_error("vocabulary holds a non-string");
    terms.push_back(t.get<std::string>());
  }
  std::vector<std::string> titles;
  for (const auto& t : require(doc, "titles")) {
    if (!t.is_string()) format_error("titles holds a non-string");
    titles.push_back(t.get<std::string>());
  }
  auto doc_lengths = read_uints(require(doc, "doc_lengths"), "doc_lengths");
  auto doc_freq = read_uints(require(doc, "doc_freq"), "doc_freq");
  const json& doc_count = require(doc, "doc_count");
  if (!doc_count.is_number_unsigned() ||
      doc_count.get<std::uint64_t>() != doc_lengths.size() ||
      titles.size() != doc_lengths.size()) {
    format_error("doc_count disagrees with doc_lengths or titles");
  }

  std::vector<TermCounts> term_counts;
  for (const auto& row : require(doc, "term_counts")) {
    TermCounts counts;
    for (const auto& pair : row) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
          !pair[1].is_number_unsigned()) {
        format_error("term_counts entries must be [term, count]");
      }
      counts.emplace_back(pair[0].get<TermIndex>(), pair[1].get<std::uint32_t>());
    }
    term_counts.push_back(std::move(counts));
  }

  std::vector<SparseVector> vectors;
  for (const auto& row : require(doc, "vectors")) {
    std::vector<SparseEntry> entries;
    for (const auto& pair : row) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
          !pair[1].is_number()) {
        format_error("vector entries must be [term, weight]");
      }
      entries.push_back({pair[0].get<TermIndex>(), pair[1].get<double>()});
    }
    try {
      vectors.push_back(SparseVector::from_entries(std::move(entries)));
    } catch (const Error& e) {
      format_error(e.what());
    }
  }

  Vocabulary vocabulary;
  try {
    vocabulary = Vocabulary(std::move(terms));
  } catch (const Error& e) {
    format_error(e.what());
  }
  ModelIndex index{TfIdfModel::from_parts(std::move(vocabulary), std::move(doc_lengths),
                                          std::move(doc_freq), std::move(term_counts),
                                          std::move(vectors)),
                   std::move(titles)};

  // Stored weights must agree with the stored counts.
  const TfIdfModel& m = index.model;
  for (std::size_t d = 0; d < m.doc_count(); ++d) {
    const auto& counts = m.term_counts()[d];
    const auto& vec = m.vectors()[d];
    std::size_t nonzero = 0;
    for (const auto& [term, count] : counts) {
      double expected = static_cast<double>(count) /
                        static_cast<double>(m.doc_lengths()[d]) *
                        m.inverse_document_frequency(term);
      if (expected != 0.0) ++nonzero;
      if (std::fabs(vec.at(term) - expected) > 1e-12) {
        format_error("stored weight disagrees with counts for video " + std::to_string(d));
      }
    }
    if (nonzero != vec.nnz()) {
      format_error("vector support disagrees with counts for video " + std::to_string(d));
    }
  }
  return index;
}

ModelIndex load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open index " + path.string());
  return load_index(in);
}

// -- QueryEngine -----------------------------------------------------------

QueryEngine::QueryEngine(ModelIndex index, Aggregation aggregation)
    : index_(std::move(index)), aggregation_(aggregation) {
  if (index_.titles.size() != index_.model.doc_count()) {
    throw Error(ErrorCode::kInvalidArgument, "titles and model disagree in size");
  }
  matrix_ = similarity_matrix(index_.model);
  for (VideoId i = 0; i < index_.titles.size(); ++i) {
    if (!by_title_.emplace(index_.titles[i], i).second) {
      throw Error(ErrorCode::kDuplicateTitle, "duplicate title '" + index_.titles[i] + "'");
    }
  }
}

std::optional<VideoId> QueryEngine::find_title(std::string_view title) const {
  auto it = by_title_.find(std::string(title));
  if (it == by_title_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> QueryEngine::titles_with_prefix(std::string_view prefix) const {
  std::vector<std::string> out;
  for (const auto& t : index_.titles) {
    if (std::string_view(t).starts_with(prefix)) out.push_back(t);
  }
  return out;
}

std::vector<Recommendation> QueryEngine::similar(std::string_view title,
                                                 std::size_t k) const {
  auto id = find_title(title);
  if (!id) {
    std::string message = "unknown title '" + std::string(title) + "'";
    auto near = titles_with_prefix(title);
    if (near.empty()) {
      message += "; no titles share that prefix";
    } else {
      message += "; titles with that prefix:";
      for (const auto& t : near) message += "\n  " + t;
    }
    throw Error(ErrorCode::kUnknownVideo, message);
  }
  const VideoId watched[] = {*id};
  return recommend(watched, k);
}

std::vector<Recommendation> QueryEngine::recommend(std::span<const VideoId> watched,
                                                   std::size_t k) const {
  WatchHistory history("", watched, size());
  return vidrec::recommend(matrix_, history, k, aggregation_);
}

std::string QueryEngine::matrix_csv() const {
  return vidrec::matrix_csv(matrix_, index_.titles);
}

}  // namespace vidrec
