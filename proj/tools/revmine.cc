// Copyright 2026 The Revmine Authors.
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

// Command-line front end: mine, dedup, split, stats, eval, sample, serve,
// label, report.
//
// Exit codes: 0 ok, 1 runtime failure, 2 usage or configuration error.

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "revmine/audit.h"
#include "revmine/audit_server.h"
#include "revmine/corpus.h"
#include "revmine/errors.h"
#include "revmine/evaluate.h"
#include "revmine/pipeline.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::atomic<bool> g_stop{false};

void OnSignal(int) { g_stop = true; }

void Emit(bool as_json, const json& result, const std::string& human) {
  if (as_json) {
    std::cout << result.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

// Optional resource overrides shared by several subcommands.
struct ResourceFlags {
  std::string stopwords;
  std::string prefixes;
  std::unique_ptr<revmine::StopwordList> stopword_list;
  std::unique_ptr<revmine::NonbreakingPrefixes> prefix_list;

  void Add(CLI::App* cmd) {
    cmd->add_option("--stopwords", stopwords,
                    "Stopword file, one word per line")
        ;
    cmd->add_option("--prefixes", prefixes,
                    "Nonbreaking prefix file, one per line")
        ;
  }

  revmine::TextResources Load() {
    revmine::TextResources r;
    if (!stopwords.empty()) {
      stopword_list = std::make_unique<revmine::StopwordList>(
          revmine::StopwordList::FromFile(stopwords));
      r.stopwords = stopword_list.get();
    }
    if (!prefixes.empty()) {
      prefix_list = std::make_unique<revmine::NonbreakingPrefixes>(
          revmine::NonbreakingPrefixes::FromFile(prefixes));
      r.prefixes = prefix_list.get();
    }
    return r;
  }
};

json StatsJson(const revmine::CorpusStats& s) {
  return {{"example_count", s.example_count},
          {"avg_input_sentences", s.avg_input_sentences},
          {"avg_input_words", s.avg_input_words},
          {"avg_output_sentences", s.avg_output_sentences},
          {"avg_output_words", s.avg_output_words}};
}

json RowJson(const revmine::ThresholdRow& r) {
  json j = {{"lambda", r.lambda},
            {"good_count", r.good_count},
            {"unsupported_count", r.unsupported_count},
            {"corpus_size_at_lambda", r.corpus_size_at_lambda}};
  j["good_rate"] = r.good_rate ? json(*r.good_rate) : json();
  return j;
}

std::string RowsTable(const std::vector<revmine::ThresholdRow>& rows) {
  std::string out;
  char line[128];
  std::snprintf(line, sizeof(line), "%-7s %6s %12s %10s %12s\n", "lambda",
                "good", "unsupported", "good_rate", "corpus_size");
  out += line;
  for (const auto& r : rows) {
    std::string rate = "-";
    if (r.good_rate) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.1f%%", *r.good_rate * 100);
      rate = buf;
    }
    std::snprintf(line, sizeof(line), "%-7.2f %6zu %12zu %10s %12zu\n",
                  r.lambda, r.good_count, r.unsupported_count, rate.c_str(),
                  r.corpus_size_at_lambda);
    out += line;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mine passage/summary pairs from MediaWiki revision histories"};
  app.set_version_flag("--version", std::string(REVMINE_VERSION));
  app.require_subcommand(1);

  bool as_json = false;
  uint64_t seed = 0;
  auto common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "Print a machine-readable JSON result");
    cmd->add_option("--seed", seed, "Random seed");
  };

  // mine
  revmine::MineOptions mine;
  ResourceFlags mine_res;
  std::string compression = "auto";
  std::vector<int> namespaces{0};
  bool no_dedup = false;
  auto* mine_cmd = app.add_subcommand("mine", "Mine a history dump into JSONL");
  common(mine_cmd);
  mine_res.Add(mine_cmd);
  mine_cmd->add_option("--dump", mine.dump, "MediaWiki XML history dump")
      ->required()
      ;
  mine_cmd->add_option("--compression", compression, "auto|none|bz2|gz")
      ->check(CLI::IsMember({"auto", "none", "bz2", "bzip2", "gz", "gzip"}));
  mine_cmd->add_option("--lambda", mine.miner.lambda, "Minimum overlap rate")
      ->check(CLI::Range(0.0, 1.0));
  mine_cmd->add_option("--min-summary-tokens",
                       mine.miner.min_summary_content_tokens,
                       "Minimum content tokens per summary (0 = off)");
  mine_cmd->add_option("--max-summary-tokens", mine.miner.max_summary_tokens,
                       "Maximum tokens per summary (0 = off)");
  mine_cmd->add_option("--min-passage-chars", mine.strip.min_passage_chars,
                       "Shortest body paragraph kept as a passage");
  mine_cmd->add_option("--namespaces", namespaces, "Namespaces to keep")
      ->delimiter(',');
  mine_cmd->add_flag("--keep-redirects", mine.policy.keep_redirects);
  mine_cmd->add_flag("--no-dedup", no_dedup);
  mine_cmd->add_option("--out", mine.out, "Output JSONL (directory with --shards)")
      ->required();
  mine_cmd->add_option("--shards", mine.shards, "Write N part files");
  mine_cmd->add_option("--workers", mine.workers, "Worker threads (0 = all cores)");

  // dedup
  std::string data, out;
  auto* dedup_cmd = app.add_subcommand("dedup", "Drop repeated (passage, summary) pairs");
  common(dedup_cmd);
  dedup_cmd->add_option("--data", data)->required();
  dedup_cmd->add_option("--out", out)->required();

  // split
  revmine::SplitSpec split;
  std::string out_dir;
  auto* split_cmd = app.add_subcommand("split", "Shuffle into train/valid/test");
  common(split_cmd);
  split_cmd->add_option("--data", data)->required();
  split_cmd->add_option("--out-dir", out_dir, "Directory for train/valid/test.jsonl")
      ->required();
  split_cmd->add_option("--valid", split.valid_size);
  split_cmd->add_option("--test", split.test_size);

  // stats
  ResourceFlags stats_res;
  auto* stats_cmd = app.add_subcommand("stats", "Corpus length statistics");
  common(stats_cmd);
  stats_res.Add(stats_cmd);
  stats_cmd->add_option("--data", data)->required();

  // eval
  ResourceFlags eval_res;
  std::string system, candidates, references;
  revmine::EvalConfig eval;
  bool keep_case = false;
  auto* eval_cmd = app.add_subcommand("eval", "ROUGE with bootstrap intervals");
  common(eval_cmd);
  eval_res.Add(eval_cmd);
  auto* sys_opt = eval_cmd->add_option("--system", system, "lead1|textrank")
                      ->check(CLI::IsMember({"lead1", "textrank"}));
  auto* data_opt = eval_cmd->add_option("--data", data, "Corpus JSONL")
                       ;
  auto* cand_opt = eval_cmd->add_option("--candidates", candidates,
                                        "System summaries (JSONL or text)")
                       ;
  eval_cmd->add_option("--references", references,
                       "Reference summaries (JSONL or text)")
      ;
  eval_cmd->add_option("--samples", eval.bootstrap_samples, "Bootstrap samples")
      ->check(CLI::PositiveNumber);
  eval_cmd->add_flag("--keep-case", keep_case, "Do not lowercase before matching");
  sys_opt->needs(data_opt);
  sys_opt->excludes(cand_opt);

  // sample
  std::string state_path;
  std::string pool;
  size_t sample_n = 50;
  bool stratified = false;
  auto* sample_cmd = app.add_subcommand("sample", "Start an audit session");
  common(sample_cmd);
  sample_cmd->add_option("--pool", pool, "Candidate JSONL mined at a low lambda")
      ->required()
      ;
  sample_cmd->add_option("-n,--n", sample_n, "Items to sample");
  sample_cmd->add_option("--state", state_path, "Audit state file")->required();
  sample_cmd->add_flag("--stratified", stratified, "Sample evenly across score bins");

  // serve
  ResourceFlags serve_res;
  revmine::AuditServerOptions serve;
  std::string static_dir;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the audit API");
  common(serve_cmd);
  serve_res.Add(serve_cmd);
  serve_cmd->add_option("--state", state_path)->required();
  serve_cmd->add_option("--host", serve.host);
  serve_cmd->add_option("--port", serve.port)->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--static", static_dir, "UI bundle directory")
      ->check(CLI::ExistingDirectory);

  // label
  std::string item_id, label;
  auto* label_cmd = app.add_subcommand("label", "Label one audit item");
  common(label_cmd);
  label_cmd->add_option("--state", state_path)->required();
  label_cmd->add_option("--item", item_id)->required();
  label_cmd->add_option("--label", label)->required()->check(
      CLI::IsMember({"good", "unsupported"}));

  // report
  std::string lambdas = "0.5,0.6,0.7";
  auto* report_cmd = app.add_subcommand("report", "Quality vs corpus size by lambda");
  common(report_cmd);
  report_cmd->add_option("--state", state_path)->required();
  report_cmd->add_option("--lambdas", lambdas);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mine_cmd) {
      mine.compression = revmine::ParseCompression(compression);
      mine.policy.allowed_namespaces = {namespaces.begin(), namespaces.end()};
      mine.dedup = !no_dedup;
      mine.seed = seed;
      mine.resources = mine_res.Load();
      if (!mine_res.stopwords.empty()) mine.stopwords_source = mine_res.stopwords;
      if (!mine_res.prefixes.empty()) mine.prefixes_source = mine_res.prefixes;
      revmine::RunManifest m = revmine::RunMine(mine);
      Emit(as_json, json::parse(revmine::ManifestJson(m)),
           "mined " + std::to_string(m.examples_written) + " examples from " +
               std::to_string(m.pages_kept) + " pages; manifest " +
               revmine::ManifestPath(mine.out).string() + "\n");
    } else if (*dedup_cmd) {
      auto examples = revmine::ReadJsonlFile(data);
      const size_t before = examples.size();
      examples = revmine::Dedup(std::move(examples));
      revmine::WriteJsonlFile(out, examples);
      Emit(as_json, {{"input", before}, {"output", examples.size()}},
           "kept " + std::to_string(examples.size()) + " of " +
               std::to_string(before) + "\n");
    } else if (*split_cmd) {
      split.seed = seed;
      auto parts = revmine::SplitCorpus(revmine::ReadJsonlFile(data), split);
      fs::create_directories(out_dir);
      revmine::WriteJsonlFile(fs::path(out_dir) / "train.jsonl", parts.train);
      revmine::WriteJsonlFile(fs::path(out_dir) / "valid.jsonl", parts.valid);
      revmine::WriteJsonlFile(fs::path(out_dir) / "test.jsonl", parts.test);
      Emit(as_json,
           {{"train", parts.train.size()},
            {"valid", parts.valid.size()},
            {"test", parts.test.size()},
            {"seed", seed}},
           "train " + std::to_string(parts.train.size()) + ", valid " +
               std::to_string(parts.valid.size()) + ", test " +
               std::to_string(parts.test.size()) + "\n");
    } else if (*stats_cmd) {
      auto res = stats_res.Load();
      auto stats = revmine::ComputeCorpusStats(revmine::ReadJsonlFile(data),
                                               *res.prefixes);
      char buf[256];
      std::snprintf(buf, sizeof(buf),
                    "examples %llu\ninput sentences %.2f\ninput words %.2f\n"
                    "output sentences %.2f\noutput words %.2f\n",
                    static_cast<unsigned long long>(stats.example_count),
                    stats.avg_input_sentences, stats.avg_input_words,
                    stats.avg_output_sentences, stats.avg_output_words);
      Emit(as_json, StatsJson(stats), buf);
    } else if (*eval_cmd) {
      auto res = eval_res.Load();
      eval.seed = seed;
      eval.lowercase = !keep_case;
      std::vector<std::string> cands, refs;
      if (!system.empty()) {
        auto examples = revmine::ReadJsonlFile(data);
        cands = revmine::RunBaseline(revmine::ParseBaseline(system), examples,
                                     res, seed);
        for (const auto& ex : examples) refs.push_back(ex.summary);
      } else {
        if (candidates.empty() || references.empty()) {
          throw revmine::ConfigError(
              "eval needs --system with --data, or --candidates with --references");
        }
        cands = revmine::ReadSummaries(candidates);
        refs = revmine::ReadSummaries(references);
      }
      auto report = revmine::Evaluate(cands, refs, eval);
      Emit(as_json, json::parse(revmine::ReportJson(report)),
           revmine::ReportTable(report));
    } else if (*sample_cmd) {
      auto examples = revmine::ReadJsonlFile(pool);
      auto state = revmine::NewAuditState(
          examples, sample_n, seed,
          stratified ? revmine::SamplingMode::kStratified
                     : revmine::SamplingMode::kUniform);
      state.pool_source = pool;
      revmine::AuditStore::Create(state_path, state);
      Emit(as_json, {{"items", state.items.size()},
                     {"pool", examples.size()},
                     {"state", state_path}},
           "sampled " + std::to_string(state.items.size()) + " of " +
               std::to_string(examples.size()) + " into " + state_path + "\n");
    } else if (*serve_cmd) {
      auto res = serve_res.Load();
      auto store = revmine::AuditStore::Open(state_path);
      if (!static_dir.empty()) serve.static_dir = static_dir;
      revmine::AuditServer server(&store, *res.stopwords, serve);
      const int port = server.Bind();
      std::signal(SIGINT, OnSignal);
      std::signal(SIGTERM, OnSignal);
      std::thread watcher([&] {
        while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(100));
        server.Stop();
      });
      Emit(as_json, {{"host", serve.host}, {"port", port}},
           "serving on http://" + serve.host + ":" + std::to_string(port) + "\n");
      std::cout.flush();
      server.Serve();
      g_stop = true;
      watcher.join();
    } else if (*label_cmd) {
      auto store = revmine::AuditStore::Open(state_path);
      auto item = store.Label(item_id, revmine::ParseLabel(label));
      Emit(as_json,
           {{"item_id", item.item_id}, {"label", revmine::LabelName(item.label)}},
           item.item_id + " " + std::string(revmine::LabelName(item.label)) + "\n");
    } else if (*report_cmd) {
      auto store = revmine::AuditStore::Open(state_path);
      auto rows = store.Report(revmine::ParseLambdaList(lambdas));
      json j = json::array();
      for (const auto& r : rows) j.push_back(RowJson(r));
      Emit(as_json, j, RowsTable(rows));
    }
  } catch (const revmine::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
