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
#include <string>

// Kaggle-shaped movie catalog (same column layout as the public 4803-movie
// dump: genres, keywords, overview, title, cast, director among others).
namespace vidrec::testing {

struct SyntheticCatalog {
  std::string csv;
  std::size_t rows = 0;
  /// Rows the generator left with an empty title, genres, cast or overview,
  /// tallied while writing, independently of the loader.
  std::size_t null_rows = 0;
};

SyntheticCatalog make_kaggle_like_catalog(std::size_t rows, std::uint64_t seed,
                                          double null_rate = 0.01);

}  // namespace vidrec::testing
