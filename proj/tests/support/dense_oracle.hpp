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

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "vidrec/catalog.hpp"

// Brute-force dense recomputation of the TF-IDF pipeline. Deliberately
// shares no code with the library: linear-search vocabulary, per-cell
// counting, full-length dot products.
namespace vidrec::testing::oracle {

struct DenseModel {
  std::vector<std::string> vocabulary;
  std::vector<std::vector<double>> weights;  // [doc][term]
};

inline DenseModel dense_tfidf(const std::vector<Document>& docs) {
  DenseModel m;
  for (const auto& d : docs) {
    for (const auto& t : d.tokens) {
      if (std::find(m.vocabulary.begin(), m.vocabulary.end(), t) == m.vocabulary.end()) {
        m.vocabulary.push_back(t);
      }
    }
  }
  const double n = static_cast<double>(docs.size());
  std::vector<double> df(m.vocabulary.size(), 0.0);
  for (std::size_t t = 0; t < m.vocabulary.size(); ++t) {
    for (const auto& d : docs) {
      if (std::find(d.tokens.begin(), d.tokens.end(), m.vocabulary[t]) != d.tokens.end()) {
        df[t] += 1.0;
      }
    }
  }
  for (const auto& d : docs) {
    std::vector<double> row(m.vocabulary.size(), 0.0);
    for (std::size_t t = 0; t < m.vocabulary.size(); ++t) {
      if (d.tokens.empty()) continue;
      double count = static_cast<double>(
          std::count(d.tokens.begin(), d.tokens.end(), m.vocabulary[t]));
      row[t] = count / static_cast<double>(d.tokens.size()) * std::log10(n / df[t]);
    }
    m.weights.push_back(std::move(row));
  }
  return m;
}

inline double dense_cosine(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0 || nb == 0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace vidrec::testing::oracle
