// Copyright 2026 The Kinforge Authors
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

// kinforge: generate, validate, solve and score kinship-reasoning stories.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kinforge/dataset.h"
#include "kinforge/digest.h"
#include "kinforge/errors.h"
#include "kinforge/eval_harness.h"
#include "kinforge/kinship_graph.h"
#include "kinforge/relation_algebra.h"
#include "kinforge/symbolic_oracle.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

// "3..6", "3,5" or "4".
std::vector<int> ParseKRange(const std::string& text) {
  std::vector<int> ks;
  try {
    if (auto dots = text.find(".."); dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      if (lo > hi) throw kinforge::ConfigError("empty k range " + text);
      for (int k = lo; k <= hi; ++k) ks.push_back(k);
      return ks;
    }
    size_t start = 0;
    while (start <= text.size()) {
      size_t comma = text.find(',', start);
      if (comma == std::string::npos) comma = text.size();
      ks.push_back(std::stoi(text.substr(start, comma - start)));
      start = comma + 1;
    }
  } catch (const std::logic_error&) {
    throw kinforge::ConfigError("cannot parse k range '" + text + "'");
  }
  return ks;
}

struct GenerateOptions {
  std::string ks = "3..6";
  int n = 5000;
  double train_frac = 0.8;
  int distractors = kinforge::kDefaultDistractors;
  uint64_t seed = 0;
  std::string out;
  int lmax = 3;
  int cmin = 2;
  int cmax = 3;
  int paths_per_graph = 1;
  int threads = 0;
};

int RunGenerate(const GenerateOptions& o) {
  kinforge::SubsetSpec spec;
  spec.n_stories = o.n;
  spec.train_fraction = o.train_frac;
  spec.distractors = o.distractors;
  spec.gen = {o.lmax, o.cmin, o.cmax, 0};
  spec.paths_per_graph = o.paths_per_graph;
  spec.threads = o.threads;
  const auto ks = ParseKRange(o.ks);
  for (int k : ks) {
    spec.k = k;
    spec.Validate();
  }
  const auto manifest = kinforge::BuildDataset(ks, spec, o.seed, o.out);
  for (const auto& s : manifest.subsets) {
    std::printf("M%d: %d train, %d test\n", s.k, s.n_train, s.n_test);
  }
  std::printf("manifest sha256 %s\n",
              kinforge::Sha256File(fs::path(o.out) / "manifest.json").c_str());
  return kExitOk;
}

int RunValidate(const std::string& dir) {
  const auto report = kinforge::ValidateDataset(dir);
  for (const auto& v : report.violations) {
    std::printf("%s\t%s\t%s\n", v.file.c_str(),
                v.record_id.empty() ? "-" : v.record_id.c_str(), v.message.c_str());
  }
  std::printf("%lld records, oracle correct %lld, %zu violations\n",
              static_cast<long long>(report.records),
              static_cast<long long>(report.oracle_correct),
              report.violations.size());
  return report.ok() ? kExitOk : kExitFailure;
}

int RunCountPaths(const std::string& ks_text, int lmax, int children) {
  const kinforge::GenConfig config{lmax, children, children, 0};
  std::printf("k,unique_paths,unique_paths_with_gender\n");
  for (int k : ParseKRange(ks_text)) {
    const auto c = kinforge::CountUniqueSequences(k, config);
    std::printf("%d,%lld,%lld\n", k, static_cast<long long>(c.ungendered),
                static_cast<long long>(c.gendered));
  }
  return kExitOk;
}

int RunOracleSolve(const std::string& data, const std::string& report_path,
                   bool drop_distractors) {
  const auto records = kinforge::ReadRecords(data);
  std::ofstream report;
  if (!report_path.empty()) {
    report.open(report_path, std::ios::trunc);
    if (!report) throw kinforge::ConfigError("cannot write " + report_path);
    report << "id,predicted\n";
  }
  size_t correct = 0;
  size_t unsolved = 0;
  const auto& parser = kinforge::StoryParser::Default();
  for (const auto& r : records) {
    std::vector<std::string> sentences;
    for (size_t i = 0; i < r.sentences.size(); ++i) {
      if (drop_distractors &&
          r.sentence_kinds[i] == kinforge::SentenceKind::kDistractor) {
        continue;
      }
      sentences.push_back(r.sentences[i]);
    }
    std::string predicted = "unsolvable";
    try {
      const auto label = kinforge::Solve(parser.Parse(sentences), r.query);
      predicted = std::string(kinforge::LabelName(label));
      if (label == r.target) ++correct;
    } catch (const std::runtime_error& e) {
      ++unsolved;
      std::fprintf(stderr, "%s: %s\n", r.id.c_str(), e.what());
    }
    if (report.is_open()) report << r.id << ',' << predicted << '\n';
  }
  const double accuracy =
      records.empty() ? 0.0 : static_cast<double>(correct) / records.size();
  std::printf("examples %zu correct %zu unsolvable %zu accuracy %.6f\n",
              records.size(), correct, unsolved, accuracy);
  return correct == records.size() ? kExitOk : kExitFailure;
}

int RunEvaluate(const std::string& gold_path, const std::string& pred_path) {
  const auto gold = kinforge::ReadGold(gold_path);
  const auto records =
      kinforge::JoinPredictions(gold, kinforge::ReadPredictionCsv(pred_path));
  const double accuracy = kinforge::Score(records);
  std::printf("predictions %zu of %zu gold examples, accuracy %.6f\n",
              records.size(), gold.size(), accuracy);
  return kExitOk;
}

int RunMatrix(const std::string& grid, std::string data, const std::string& out,
              std::string long_out, const std::string& model) {
  if (data.empty()) data = (fs::path(grid) / "gold").string();
  const auto matrix = kinforge::LoadGeneralizationMatrix(grid, data);
  std::cout << matrix.LayoutText(model);
  if (!out.empty()) {
    std::ofstream(out, std::ios::trunc) << matrix.LayoutCsv(model);
    if (long_out.empty()) {
      fs::path p(out);
      long_out = (p.parent_path() / (p.stem().string() + "_long.csv")).string();
    }
  }
  if (!long_out.empty()) std::ofstream(long_out, std::ios::trunc) << matrix.LongCsv();
  for (auto [r, c] : matrix.holes()) {
    std::fprintf(stderr, "missing cell: train M%d, test M%d\n", r, c);
  }
  return kExitOk;
}

int RunDumpGraph(int lmax, int cmin, int cmax, uint64_t seed) {
  std::cout << kinforge::GenerateFamilyGraph({lmax, cmin, cmax, seed}).DebugDump();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kinforge: kinship-reasoning story generator and tools"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate dataset subsets");
  // The config file is read by the top-level app; fallthrough lets it follow
  // the subcommand. Keys go in a [generate] section.
  app.set_config("--config", "", "TOML/INI config file; flags override it");
  generate->fallthrough();
  generate->add_option("--k", gen.ks, "Path lengths, e.g. 3..6 or 3,5")
      ->capture_default_str();
  generate->add_option("--n", gen.n, "Stories per subset")->capture_default_str();
  generate->add_option("--train-frac", gen.train_frac, "Training fraction")
      ->capture_default_str();
  generate->add_option("--distractors", gen.distractors, "Distractors per entity")
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "Master seed")->capture_default_str();
  generate->add_option("--out", gen.out, "Output directory")->required();
  generate->add_option("--lmax", gen.lmax, "Child generations per graph")
      ->capture_default_str();
  generate->add_option("--cmin", gen.cmin, "Minimum children per couple")
      ->capture_default_str();
  generate->add_option("--cmax", gen.cmax, "Maximum children per couple")
      ->capture_default_str();
  generate->add_option("--paths-per-graph", gen.paths_per_graph,
                       "Stories drawn from one graph")
      ->capture_default_str();
  generate->add_option("--threads", gen.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();

  std::string validate_dir;
  auto* validate = app.add_subcommand("validate", "Re-check a generated dataset");
  validate->add_option("dir", validate_dir, "Dataset directory")->required();

  std::string count_ks = "3..7";
  int count_lmax = 3;
  int count_children = 3;
  auto* count = app.add_subcommand("count-paths", "Count unique relation sequences");
  count->add_option("--k", count_ks, "Path lengths")->capture_default_str();
  count->add_option("--lmax", count_lmax, "Child generations")->capture_default_str();
  count->add_option("--children", count_children, "Children per couple")
      ->capture_default_str();

  std::string oracle_data, oracle_report;
  bool oracle_drop = false;
  auto* oracle = app.add_subcommand("oracle", "Symbolic reference solver");
  oracle->require_subcommand(1);
  auto* solve = oracle->add_subcommand("solve", "Solve every record in a file");
  solve->add_option("--data", oracle_data, "Dataset .jsonl file")->required();
  solve->add_option("--report", oracle_report, "Write id,predicted CSV here");
  solve->add_flag("--no-distractors", oracle_drop, "Drop distractor sentences first");

  std::string eval_gold, eval_pred;
  auto* evaluate = app.add_subcommand("evaluate", "Score a prediction file");
  evaluate->add_option("--gold", eval_gold, "Gold .jsonl or .csv")->required();
  evaluate->add_option("--pred", eval_pred, "Predictions id,predicted CSV")->required();

  std::string matrix_grid, matrix_data, matrix_out, matrix_long, matrix_model = "model";
  auto* matrix = app.add_subcommand("matrix", "Train-on-M_k / test-on-M_j matrix");
  matrix->add_option("--grid", matrix_grid, "Directory of train<k>_test<j>.csv")
      ->required();
  matrix->add_option("--data", matrix_data,
                     "Dataset root holding M<j>/test.jsonl (default: <grid>/gold)");
  matrix->add_option("--out", matrix_out, "Table CSV in row/column layout");
  matrix->add_option("--long-out", matrix_long,
                     "train_k,test_j,accuracy CSV (default: <out>_long.csv)");
  matrix->add_option("--model", matrix_model, "Row name")->capture_default_str();

  int dump_lmax = 3, dump_cmin = 1, dump_cmax = 3;
  uint64_t dump_seed = 0;
  auto* dump = app.add_subcommand("dump-graph", "Print one generated family graph");
  dump->add_option("--lmax", dump_lmax)->capture_default_str();
  dump->add_option("--cmin", dump_cmin)->capture_default_str();
  dump->add_option("--cmax", dump_cmax)->capture_default_str();
  dump->add_option("--seed", dump_seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*generate) return RunGenerate(gen);
    if (*validate) return RunValidate(validate_dir);
    if (*count) return RunCountPaths(count_ks, count_lmax, count_children);
    if (*solve) return RunOracleSolve(oracle_data, oracle_report, oracle_drop);
    if (*evaluate) return RunEvaluate(eval_gold, eval_pred);
    if (*matrix) {
      return RunMatrix(matrix_grid, matrix_data, matrix_out, matrix_long, matrix_model);
    }
    if (*dump) return RunDumpGraph(dump_lmax, dump_cmin, dump_cmax, dump_seed);
  } catch (const kinforge::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const kinforge::UnsatisfiableError& e) {
    std::fprintf(stderr, "unsatisfiable: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailure;
  }
  return kExitConfig;
}
