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

#include "vidrec/service.hpp"

#include <charconv>
#include <optional>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "vidrec/error.hpp"

namespace vidrec {

using nlohmann::json;

namespace {

constexpr std::size_t kDefaultK = 10;

HttpResponse json_response(int status, const json& body) {
  return {status, "application/json",
          body.dump(-1, ' ', false, json::error_handler_t::replace) + "\n"};
}

HttpResponse error_response(int status, std::string_view message) {
  return json_response(status, json{{"error", std::string(message)}});
}

std::optional<std::string> param(const QueryParams& params, const char* key) {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> parse_count(std::string_view text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

/// nullopt means malformed.
std::optional<std::size_t> parse_k(const QueryParams& params) {
  auto text = param(params, "k");
  if (!text) return kDefaultK;
  auto k = parse_count(*text);
  if (!k || *k == 0) return std::nullopt;
  return k;
}

json ranked(const QueryEngine& engine, const std::vector<Recommendation>& recs) {
  json out = json::array();
  for (const auto& r : recs) {
    out.push_back({{"id", r.video_id}, {"title", engine.titles()[r.video_id]},
                   {"score", r.score}});
  }
  return out;
}

}  // namespace

HttpResponse QueryService::handle(std::string_view path,
                                  const QueryParams& params) const {
  try {
    if (path == "/health") return health();
    if (path == "/videos") return videos();
    if (path == "/similar") return similar(params);
    if (path == "/recommend") return recommend(params);
    if (path == "/matrix") return matrix();
    return error_response(404, "no route " + std::string(path));
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kUnknownVideo:
      case ErrorCode::kUnknownTerm:
        return error_response(404, e.what());
      case ErrorCode::kInvalidArgument:
      case ErrorCode::kPrecondition:
        return error_response(400, e.what());
      default:
        return error_response(500, e.what());
    }
  }
}

HttpResponse QueryService::health() const {
  return json_response(200, {{"status", "ok"},
                             {"format_version", kIndexFormatVersion},
                             {"doc_count", engine_.size()},
                             {"vocabulary_size", engine_.model().vocabulary().size()},
                             {"aggregation", aggregation_name(engine_.aggregation())}});
}

HttpResponse QueryService::videos() const {
  json list = json::array();
  for (VideoId i = 0; i < engine_.size(); ++i) {
    list.push_back({{"id", i}, {"title", engine_.titles()[i]}});
  }
  return json_response(200, {{"videos", std::move(list)}});
}

HttpResponse QueryService::similar(const QueryParams& params) const {
  auto title = param(params, "title");
  if (!title) return error_response(400, "missing 'title' parameter");
  auto k = parse_k(params);
  if (!k) return error_response(400, "k must be a positive integer");
  auto recs = engine_.similar(*title, *k);
  return json_response(200, {{"title", *title},
                             {"id", *engine_.find_title(*title)},
                             {"k", *k},
                             {"results", ranked(engine_, recs)}});
}

HttpResponse QueryService::recommend(const QueryParams& params) const {
  auto k = parse_k(params);
  if (!k) return error_response(400, "k must be a positive integer");
  std::vector<VideoId> watched;
  if (auto text = param(params, "watched"); text && !text->empty()) {
    std::string_view rest = *text;
    for (;;) {
      std::size_t comma = rest.find(',');
      auto id = parse_count(rest.substr(0, comma));
      if (!id) return error_response(400, "watched must be comma-separated video ids");
      watched.push_back(*id);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  auto recs = engine_.recommend(watched, *k);
  return json_response(200, {{"watched", watched}, {"k", *k},
                             {"results", ranked(engine_, recs)}});
}

HttpResponse QueryService::matrix() const {
  return {200, "text/csv", engine_.matrix_csv()};
}

void QueryService::mount(httplib::Server& server) const {
  for (const char* route : {"/health", "/videos", "/similar", "/recommend", "/matrix"}) {
    server.Get(route, [this, route](const httplib::Request& req, httplib::Response& res) {
      HttpResponse r = handle(route, req.params);
      res.status = r.status;
      res.set_content(r.body, r.content_type);
    });
  }
}

std::pair<std::string, int> parse_bind_address(std::string_view bind) {
  std::size_t colon = bind.rfind(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument, "bind address must be host:port");
  }
  std::string host(bind.substr(0, colon));
  if (host.empty()) host = "0.0.0.0";
  auto port = parse_count(bind.substr(colon + 1));
  if (!port || *port > 65535) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid port in bind address '" + std::string(bind) + "'");
  }
  return {host, static_cast<int>(*port)};
}

void serve(const QueryEngine& engine, std::string_view bind_address) {
  auto [host, port] = parse_bind_address(bind_address);
  httplib::Server server;
  QueryService service(engine);
  service.mount(server);
  if (!server.listen(host, port)) {
    throw Error(ErrorCode::kIo, "cannot listen on " + std::string(bind_address));
  }
}

}  // namespace vidrec
