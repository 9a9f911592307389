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

#include <map>
#include <string>
#include <string_view>

#include "vidrec/engine.hpp"

namespace httplib {
class Server;
}

namespace vidrec {

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

using QueryParams = std::multimap<std::string, std::string>;

/// Read-only HTTP front end over a QueryEngine.
///
///   GET /health                      index statistics
///   GET /videos                      [{id, title}]
///   GET /similar?title=T&k=N         ranked list for one title
///   GET /recommend?watched=1,4&k=N   ranked list for a watch history
///   GET /matrix                      similarity grid as CSV
///
/// k defaults to 10. Unknown titles or ids answer 404, malformed k or ids
/// 400. Handlers only read the engine, so concurrent requests need no locks.
class QueryService {
 public:
  explicit QueryService(const QueryEngine& engine) : engine_(engine) {}

  HttpResponse handle(std::string_view path, const QueryParams& params) const;

  /// Registers GET handlers for every route on `server`.
  void mount(httplib::Server& server) const;

 private:
  HttpResponse health() const;
  HttpResponse videos() const;
  HttpResponse similar(const QueryParams& params) const;
  HttpResponse recommend(const QueryParams& params) const;
  HttpResponse matrix() const;

  const QueryEngine& engine_;
};

/// "host:port" or ":port" (all interfaces). Throws Error(kInvalidArgument).
std::pair<std::string, int> parse_bind_address(std::string_view bind);

/// Blocks serving until the process is terminated. Throws Error(kIo) if the
/// address cannot be bound.
void serve(const QueryEngine& engine, std::string_view bind_address);

}  // namespace vidrec
