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

#include "vidrec/cli.hpp"

#include <cstdio>
#include <cstdint>

#include <CLI11.hpp>

#include "vidrec/engine.hpp"
#include "vidrec/error.hpp"
#include "vidrec/evaluation.hpp"
#include "vidrec/service.hpp"

namespace vidrec {

namespace {

EngineConfig config_from(const std::string& path) {
  return path.empty() ? EngineConfig{} : EngineConfig::from_file(path);
}

void print_ranked(std::ostream& out, const QueryEngine& engine,
                  const std::vector<Recommendation>& recs) {
  char score[32];
  for (const auto& r : recs) {
    std::snprintf(score, sizeof score, "%.6f", r.score);
    out << engine.titles()[r.video_id] << '\t' << score << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Content-based video recommender over a TF-IDF index", "vidrec"};
  app.require_subcommand(1);

  std::string config_path;
  std::string index_path;
  std::size_t k = 10;
  app.add_option("--config", config_path, "JSON engine config")->check(CLI::ExistingFile);

  auto* build = app.add_subcommand("build", "Fit an index from a catalog CSV");
  std::string catalog_path;
  build->add_option("catalog", catalog_path, "Catalog CSV")->required();
  build->add_option("--index", index_path, "Output index file")->required();

  auto* similar = app.add_subcommand("similar", "Videos most similar to a title");
  std::string title;
  similar->add_option("title", title, "Exact catalog title")->required();
  similar->add_option("--index", index_path, "Index file")->required();
  similar->add_option("--k", k, "Maximum results")->check(CLI::PositiveNumber);

  auto* rec = app.add_subcommand("recommend", "Recommendations for a watch history");
  std::vector<VideoId> watched_ids;
  std::vector<std::string> watched_titles;
  rec->add_option("--index", index_path, "Index file")->required();
  rec->add_option("--watched", watched_ids, "Watched video ids")->delimiter(',');
  rec->add_option("--title", watched_titles, "Watched title (repeatable)");
  rec->add_option("--k", k, "Maximum results")->check(CLI::PositiveNumber);

  auto* eval = app.add_subcommand("evaluate", "Precision, recall and F1 from counts");
  std::uint64_t tp = 0, fn = 0, fp = 0, tn = 0;
  eval->add_option("tp", tp, "True positives")->required();
  eval->add_option("fn", fn, "False negatives")->required();
  eval->add_option("fp", fp, "False positives")->required();
  eval->add_option("tn", tn, "True negatives")->required();

  auto* exp = app.add_subcommand("export-matrix", "Write the similarity grid as CSV");
  std::string output_path;
  exp->add_option("output", output_path, "Destination CSV")->required();
  exp->add_option("--index", index_path, "Index file")->required();

  auto* srv = app.add_subcommand("serve", "Serve read-only HTTP queries");
  std::string bind = "127.0.0.1:8080";
  srv->add_option("--index", index_path, "Index file")->required();
  srv->add_option("--bind", bind, "host:port");

  std::vector<const char*> argv{"vidrec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    const EngineConfig config = config_from(config_path);

    if (*build) {
      Catalog catalog = load_catalog(catalog_path, config.make_preprocessor());
      for (const auto& w : catalog.warnings) err << "warning: " << w << '\n';
      ModelIndex index = build_index(catalog);
      save_index(index, index_path);
      out << "records " << catalog.size() << '\n'
          << "vocabulary " << index.model.vocabulary().size() << '\n'
          << "dropped " << catalog.dropped_rows << '\n';
      return 0;
    }

    if (*eval) {
      out << format_report(evaluate(ConfusionMatrix{tp, fn, fp, tn}));
      return 0;
    }

    QueryEngine engine(load_index(index_path), config.aggregation);
    if (*similar) {
      print_ranked(out, engine, engine.similar(title, k));
    } else if (*rec) {
      for (const auto& t : watched_titles) {
        auto id = engine.find_title(t);
        if (!id) throw Error(ErrorCode::kUnknownVideo, "unknown title '" + t + "'");
        watched_ids.push_back(*id);
      }
      print_ranked(out, engine, engine.recommend(watched_ids, k));
    } else if (*exp) {
      export_matrix(engine.matrix(), engine.titles(), output_path);
    } else if (*srv) {
      err << "serving " << engine.size() << " videos on " << bind << '\n';
      serve(engine, bind);
    }
    return 0;
  } catch (const Error& e) {
    err << "error (" << error_code_name(e.code()) << "): " << e.what() << '\n';
    return 1;
  }
}

}  // namespace vidrec
