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

#include <string_view>

// Contents of data/stopwords_en.txt and data/sample_collapse.tsv, embedded
// at configure time so the default pipeline needs no files on disk.
namespace vidrec::resources {

extern const std::string_view kStopwordsEnglish;
extern const std::string_view kSampleCollapseList;

}  // namespace vidrec::resources
