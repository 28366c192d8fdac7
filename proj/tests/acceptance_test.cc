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

// Acceptance checks. Prints one PASS/FAIL/SKIP line per criterion and exits
// non-zero when any check fails. Oracles here are written independently of
// the library code they judge.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "revmine/corpus.h"
#include "revmine/evaluate.h"
#include "revmine/miner.h"
#include "revmine/revdiff.h"
#include "revmine/rouge.h"
#include "revmine/textproc.h"
#include "revmine/textrank.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum class Status { kPass, kFail, kSkip };

struct Outcome {
  Status status = Status::kPass;
  std::string detail;
};

Outcome Fail(std::string why) { return {Status::kFail, std::move(why)}; }

std::string ReadAll(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path Data(const std::string& rel) { return fs::path(REVMINE_TEST_DATA) / rel; }

int RunCli(const std::string& args) {
  std::string cmd = std::string(REVMINE_CLI) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Q(const fs::path& p) { return "'" + p.string() + "'"; }

struct ScratchDir {
  fs::path path;
  ScratchDir() {
    path = fs::temp_directory_path() /
           ("revmine-accept-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

// --- planted pairs ----------------------------------------------------------

Outcome PlantedPairRecovery() {
  ScratchDir dir;
  const fs::path out = dir.path / "out.jsonl";
  auto start = std::chrono::steady_clock::now();
  int code = RunCli("mine --dump " + Q(Data("minidump/minidump.xml")) +
                    " --lambda 0.6 --out " + Q(out));
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start).count();
  if (code != 0) return Fail("mine exited " + std::to_string(code));
  std::string got = ReadAll(out);
  std::string want = ReadAll(Data("minidump/golden_lambda0.6.jsonl"));
  if (got != want) return Fail("output differs from golden");
  if (secs >= 5) return Fail("took " + std::to_string(secs) + " s");
  auto lines = std::count(got.begin(), got.end(), '\n');
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%ld lines (planted pairs scoring >= 0.6), byte-identical, %.3f s",
                static_cast<long>(lines), secs);
  return {Status::kPass, buf};
}

// --- overlap score ------------------------------------------------------------

std::vector<std::string> RandomWords(std::mt19937_64& rng, size_t max_len,
                                     const std::vector<std::string>& vocab) {
  std::vector<std::string> w(rng() % (max_len + 1));
  for (auto& s : w) s = vocab[rng() % vocab.size()];
  return w;
}

Outcome OverlapScoreOracle() {
  std::mt19937_64 rng(2718);
  std::vector<std::string> vocab;
  for (int i = 0; i < 30; ++i) vocab.push_back("w" + std::to_string(i));
  for (int i = 0; i < 10000; ++i) {
    auto s = RandomWords(rng, 20, vocab), p = RandomWords(rng, 30, vocab);
    std::set<std::string> ss(s.begin(), s.end()), ps(p.begin(), p.end());
    size_t shared = 0;
    for (const auto& w : ss) shared += ps.count(w);
    auto got = revmine::ComputeOverlapScore(revmine::TokenSet(s), revmine::TokenSet(p));
    if (ss.empty()) {
      if (got) return Fail("empty sentence scored");
      continue;
    }
    // Compare as rationals: a/b == c/d  <=>  ad == bc.
    if (!got || got->shared * ss.size() != shared * got->sentence_size ||
        got->value() != static_cast<double>(shared) / ss.size()) {
      return Fail("pair " + std::to_string(i) + " disagrees");
    }
  }

  // Threshold sweep on random deltas against a brute-force best-passage oracle.
  const std::vector<std::string> stop = {"the", "of", "and", "."};
  std::vector<std::string> words = vocab;
  words.insert(words.end(), stop.begin(), stop.end());
  const auto& stopwords = revmine::StopwordList::English();
  revmine::MinerConfig config;
  config.min_summary_content_tokens = 0;
  config.max_summary_tokens = 0;
  for (int d = 0; d < 100; ++d) {
    revmine::RevisionDelta delta;
    for (size_t k = rng() % 6; k > 0; --k) {
      revmine::TokenizedText t;
      t.tokens = RandomWords(rng, 12, words);
      delta.added_sentences.push_back(t);
    }
    for (size_t k = rng() % 5; k > 0; --k) {
      revmine::TokenizedText t;
      t.tokens = RandomWords(rng, 40, words);
      delta.added_passages.push_back(t);
    }
    auto content = [&](const std::vector<std::string>& t) {
      std::set<std::string> out;
      for (const auto& w : t) {
        if (std::find(stop.begin(), stop.end(), w) == stop.end()) out.insert(w);
      }
      return out;
    };
    // Best score per sentence as (shared, size).
    std::vector<std::pair<size_t, size_t>> best;
    for (const auto& s : delta.added_sentences) {
      auto sc = content(s.tokens);
      if (sc.empty() || delta.added_passages.empty()) continue;
      size_t top = 0;
      for (const auto& p : delta.added_passages) {
        auto pc = content(p.tokens);
        size_t shared = 0;
        for (const auto& w : sc) shared += pc.count(w);
        top = std::max(top, shared);
      }
      best.emplace_back(top, sc.size());
    }
    size_t previous = SIZE_MAX;
    for (int tenth = 0; tenth <= 10; ++tenth) {
      config.lambda = tenth / 10.0;
      auto kept = revmine::MineDelta(delta, stopwords, config);
      size_t want = 0;
      // shared/size >= tenth/10  <=>  10*shared >= tenth*size.
      for (auto [shared, size] : best) want += 10 * shared >= tenth * size;
      if (kept.size() != want) {
        return Fail("delta " + std::to_string(d) + " at lambda " +
                    std::to_string(config.lambda) + ": " +
                    std::to_string(kept.size()) + " kept, oracle " +
                    std::to_string(want));
      }
      if (kept.size() > previous) return Fail("size grew with lambda");
      previous = kept.size();
    }
  }
  return {Status::kPass,
          "10000 token-set pairs exact; 100 deltas monotone over 11 thresholds"};
}

// --- diff ---------------------------------------------------------------------

size_t LcsDp(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::vector<size_t>> t(a.size() + 1, std::vector<size_t>(b.size() + 1));
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      t[i][j] = a[i - 1] == b[j - 1] ? t[i - 1][j - 1] + 1
                                     : std::max(t[i - 1][j], t[i][j - 1]);
    }
  }
  return t[a.size()][b.size()];
}

Outcome DiffOracle() {
  std::mt19937_64 rng(31415);
  const std::vector<std::string> alphabet = {"a", "b", "c", "d", "e"};
  for (int i = 0; i < 10000; ++i) {
    auto a = RandomWords(rng, 12, alphabet), b = RandomWords(rng, 12, alphabet);
    size_t added = revmine::AddedElements(a, b).size();
    if (added != b.size() - LcsDp(a, b)) {
      return Fail("pair " + std::to_string(i) + ": " + std::to_string(added) +
                  " added, oracle " + std::to_string(b.size() - LcsDp(a, b)));
    }
  }
  return {Status::kPass, "10000 pairs agree with |new| - LCS"};
}

// --- ROUGE --------------------------------------------------------------------

struct Prf {
  double r, p, f;
};

Prf OracleRougeN(const std::vector<std::string>& cand,
                 const std::vector<std::string>& ref, size_t n) {
  auto grams = [n](const std::vector<std::string>& t) {
    std::map<std::vector<std::string>, int> m;
    for (size_t i = 0; i + n <= t.size(); ++i) {
      ++m[std::vector<std::string>(t.begin() + i, t.begin() + i + n)];
    }
    return m;
  };
  auto c = grams(cand), r = grams(ref);
  int overlap = 0, nc = 0, nr = 0;
  for (auto& [g, k] : c) {
    nc += k;
    auto it = r.find(g);
    if (it != r.end()) overlap += std::min(k, it->second);
  }
  for (auto& [g, k] : r) nr += k;
  double rec = nr ? double(overlap) / nr : 0, pre = nc ? double(overlap) / nc : 0;
  return {rec, pre, rec + pre > 0 ? 2 * rec * pre / (rec + pre) : 0};
}

Prf OracleRougeL(const std::vector<std::string>& cand,
                 const std::vector<std::string>& ref) {
  double l = static_cast<double>(LcsDp(cand, ref));
  double rec = ref.empty() ? 0 : l / ref.size();
  double pre = cand.empty() ? 0 : l / cand.size();
  return {rec, pre, rec + pre > 0 ? 2 * rec * pre / (rec + pre) : 0};
}

bool Near(const revmine::RougeTriple& got, const Prf& want, double tol) {
  return std::abs(got.recall - want.r) <= tol &&
         std::abs(got.precision - want.p) <= tol &&
         std::abs(got.f1 - want.f) <= tol;
}

std::vector<std::string> Words(const std::string& s) {
  return revmine::SplitOnSpaces(s);
}

Outcome RougeCorrectness() {
  std::mt19937_64 rng(1618);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e", "f", "g", "h"};
  for (int i = 0; i < 200; ++i) {
    auto c = RandomWords(rng, 25, vocab), r = RandomWords(rng, 25, vocab);
    if (!Near(revmine::RougeN(c, r, 1), OracleRougeN(c, r, 1), 1e-9) ||
        !Near(revmine::RougeN(c, r, 2), OracleRougeN(c, r, 2), 1e-9) ||
        !Near(revmine::RougeL(c, r), OracleRougeL(c, r), 1e-9)) {
      return Fail("random pair " + std::to_string(i));
    }
  }
  auto cand = Words("the cat sat on the mat"), ref = Words("the cat was on the mat");
  if (!Near(revmine::RougeN(cand, ref, 1), {5.0 / 6, 5.0 / 6, 5.0 / 6}, 1e-12) ||
      !Near(revmine::RougeN(cand, ref, 2), {3.0 / 5, 3.0 / 5, 3.0 / 5}, 1e-12) ||
      !Near(revmine::RougeL(cand, ref), {5.0 / 6, 5.0 / 6, 5.0 / 6}, 1e-12)) {
    return Fail("worked example");
  }
  for (const auto& t : {cand, ref, Words("a b a b a")}) {
    for (auto got : {revmine::RougeN(t, t, 1), revmine::RougeN(t, t, 2),
                     revmine::RougeL(t, t)}) {
      if (!Near(got, {1, 1, 1}, 0)) return Fail("identity pair");
    }
  }
  return {Status::kPass,
          "200 random pairs within 1e-9; worked example 5/6, 3/5, 5/6; identity 1"};
}

// --- TextRank -----------------------------------------------------------------

// Own similarity and power iteration; content words are anything outside
// the fixture's function words.
size_t OracleTextRank(const std::vector<std::vector<std::string>>& sents) {
  const std::set<std::string> function_words = {"the", "of", "and"};
  const int n = static_cast<int>(sents.size());
  std::vector<std::set<std::string>> content(n);
  std::vector<double> len(n, 0);
  for (int i = 0; i < n; ++i) {
    for (const auto& w : sents[i]) {
      if (w == ".") continue;
      len[i] += 1;
      if (!function_words.count(w)) content[i].insert(w);
    }
  }
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || len[i] < 2 || len[j] < 2) continue;
      double shared = 0;
      for (const auto& x : content[i]) shared += content[j].count(x);
      w(i, j) = shared / (std::log(len[i]) + std::log(len[j]));
    }
  }
  Eigen::MatrixXd m(n, n);
  for (int j = 0; j < n; ++j) {
    double out = w.row(j).sum();
    for (int i = 0; i < n; ++i) m(i, j) = out > 0 ? w(j, i) / out : 1.0 / n;
  }
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / n);
  for (int it = 0; it < 10000; ++it) {
    Eigen::VectorXd next = Eigen::VectorXd::Constant(n, 0.15 / n) + 0.85 * m * x;
    double delta = (next - x).cwiseAbs().maxCoeff();
    x = next;
    if (delta < 1e-15) break;
  }
  int best = 0;
  for (int i = 1; i < n; ++i) {
    if (x[i] > x[best] * (1 + 1e-9)) best = i;
  }
  return static_cast<size_t>(best);
}

Outcome TextRankChecks() {
  std::mt19937_64 rng(1414);
  const auto& stopwords = revmine::StopwordList::English();
  std::vector<std::string> vocab = {"the", "of", "and"};
  for (int i = 0; i < 12; ++i) vocab.push_back("k" + std::to_string(i));
  double worst_residual = 0;
  size_t worst_iterations = 0;
  for (int f = 0; f < 50; ++f) {
    std::vector<std::vector<std::string>> sents(5);
    for (auto& s : sents) {
      s = RandomWords(rng, 10, vocab);
      s.push_back(".");
    }
    auto pr = revmine::WeightedPageRank(revmine::SimilarityMatrix(sents, stopwords));
    worst_residual = std::max(worst_residual, pr.residual);
    worst_iterations = std::max(worst_iterations, pr.iterations);
    if (!pr.converged || pr.residual >= 1e-6 || pr.iterations > 100) {
      return Fail("fixture " + std::to_string(f) + " did not converge");
    }
    size_t got = revmine::TextRankSelect(sents, stopwords, 0);
    size_t want = OracleTextRank(sents);
    if (got != want) {
      return Fail("fixture " + std::to_string(f) + ": picked " +
                  std::to_string(got) + ", oracle " + std::to_string(want));
    }
  }
  // Short passages: seeded, reproducible, and both positions reachable.
  std::vector<std::vector<std::string>> two = {{"k1", "k2", "."}, {"k1", "k3", "."}};
  int picks[2] = {0, 0};
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    size_t a = revmine::TextRankSelect(two, stopwords, seed);
    if (a != revmine::TextRankSelect(two, stopwords, seed) || a > 1) {
      return Fail("fallback not reproducible");
    }
    ++picks[a];
  }
  if (picks[0] < 400 || picks[1] < 400) return Fail("fallback skewed");
  std::vector<std::vector<std::string>> one = {{"k1", "."}};
  if (revmine::TextRankSelect(one, stopwords, 7) != 0) return Fail("single sentence");
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "50 fixtures agree with oracle; max residual %.2e in <= %zu "
                "iterations; short-passage fallback split %d/%d",
                worst_residual, worst_iterations, picks[0], picks[1]);
  return {Status::kPass, buf};
}

// --- determinism --------------------------------------------------------------

Outcome Determinism() {
  ScratchDir dir;
  const fs::path out = dir.path / "run.jsonl";
  const std::string cmd = "mine --dump " + Q(Data("minidump/minidump.xml")) +
                          " --lambda 0.3 --seed 11 --workers 3 --out " + Q(out);
  std::string jsonl[2];
  json manifest[2];
  for (int i = 0; i < 2; ++i) {
    if (RunCli(cmd) != 0) return Fail("mine failed");
    jsonl[i] = ReadAll(out);
    manifest[i] = json::parse(ReadAll(out.string() + ".manifest.json"));
    manifest[i].erase("wall_time_seconds");
    fs::remove(out);
  }
  if (jsonl[0].empty() || jsonl[0] != jsonl[1]) return Fail("JSONL differs");
  if (manifest[0] != manifest[1]) return Fail("manifest differs");
  return {Status::kPass, "two runs byte-identical (JSONL and manifest without wall time)"};
}

// --- released data ------------------------------------------------------------

bool Within(double got, double want, double rel) {
  return std::abs(got - want) <= rel * std::abs(want);
}

Outcome ReleasedData() {
  const char* root = std::getenv("REVMINE_RELEASED_DATA");
  if (!root || !*root) {
    return {Status::kSkip, "REVMINE_RELEASED_DATA not set"};
  }
  const fs::path dir(root);
  std::vector<revmine::CorpusExample> all, test;
  for (const char* part : {"train", "valid", "test"}) {
    fs::path p = dir / (std::string(part) + ".jsonl");
    if (!fs::exists(p)) return {Status::kSkip, p.string() + " missing"};
    auto rows = revmine::ReadJsonlFile(p);
    if (std::string(part) == "test") test = rows;
    all.insert(all.end(), rows.begin(), rows.end());
  }
  auto stats = revmine::ComputeCorpusStats(all, revmine::NonbreakingPrefixes::English());
  const double want[4] = {4.83, 118.26, 1.0, 22.20};
  const double got[4] = {stats.avg_input_sentences, stats.avg_input_words,
                         stats.avg_output_sentences, stats.avg_output_words};
  char buf[256];
  for (int i = 0; i < 4; ++i) {
    if (!Within(got[i], want[i], 0.02)) {
      std::snprintf(buf, sizeof(buf), "length field %d: %.2f vs %.2f", i, got[i], want[i]);
      return Fail(buf);
    }
  }
  auto cands = revmine::RunBaseline(revmine::Baseline::kLead1, test, {}, 0);
  std::vector<std::string> refs;
  for (const auto& ex : test) refs.push_back(ex.summary);
  auto report = revmine::Evaluate(cands, refs, {.bootstrap_samples = 200});
  const double f1 = report.metrics[0].f1.mean * 100;
  if (std::abs(f1 - 35.97) > 1.5) {
    std::snprintf(buf, sizeof(buf), "lead1 rouge1 F1 %.2f vs 35.97", f1);
    return Fail(buf);
  }
  std::snprintf(buf, sizeof(buf),
                "stats %.2f/%.2f/%.2f/%.2f within 2%%; lead1 rouge1 F1 %.2f",
                got[0], got[1], got[2], got[3], f1);
  return {Status::kPass, buf};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> checks[] = {
      {"planted_pair_recovery", PlantedPairRecovery},
      {"overlap_score_oracle", OverlapScoreOracle},
      {"diff_oracle", DiffOracle},
      {"rouge_correctness", RougeCorrectness},
      {"textrank", TextRankChecks},
      {"determinism", Determinism},
      {"released_data", ReleasedData},
  };
  int failures = 0;
  for (const auto& [name, fn] : checks) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = Fail(std::string("exception: ") + e.what());
    }
    const char* tag = o.status == Status::kPass   ? "PASS"
                      : o.status == Status::kSkip ? "SKIP"
                                                  : "FAIL";
    if (o.status == Status::kFail) ++failures;
    std::printf("%s %s: %s\n", tag, name, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
