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

#ifndef KINFORGE_DATASET_H_
#define KINFORGE_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kinforge/kinship_graph.h"
#include "kinforge/relation_algebra.h"
#include "kinforge/story_renderer.h"

namespace kinforge {

inline constexpr std::string_view kDatasetVersion = "kinforge-dataset/0.1";

struct SubsetSpec {
  int k = 3;
  int n_stories = 5000;
  double train_fraction = 0.8;
  int distractors = kDefaultDistractors;
  // Seed field is ignored; every graph gets a derived seed.
  GenConfig gen{3, 2, 3, 0};
  uint64_t master_seed = 0;
  // Paths taken from one graph before a fresh graph is generated.
  int paths_per_graph = 1;
  int entity_pool = kDefaultEntityPool;
  // Worker threads; 0 means hardware concurrency.
  int threads = 0;

  // Throws ConfigError.
  void Validate() const;
  int n_train() const;
  int n_test() const { return n_stories - n_train(); }
  uint64_t subset_seed() const;
};

// Thrown when the generator cannot reach the requested story count.
class UnsatisfiableError : public std::runtime_error {
 public:
  UnsatisfiableError(const std::string& what, int achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  int achieved() const { return achieved_; }

 private:
  int achieved_;
};

struct SeedInfo {
  uint64_t master_seed = 0;
  uint64_t subset_seed = 0;
  uint64_t graph_index = 0;
  uint64_t graph_seed = 0;
  uint64_t path_seed = 0;
  uint64_t render_seed = 0;
};

// One generated example: the anonymized story plus the named original.
struct GeneratedExample {
  StoryExample anonymized;
  std::string story_named;
  SeedInfo seeds;
};

// Generates the n_stories examples of a subset in memory, train first.
std::vector<GeneratedExample> GenerateSubset(const SubsetSpec& spec);

// A record as read back from a dataset file.
struct DatasetRecord {
  std::string id;
  int k = 0;
  int d = 0;
  std::string story_text;
  std::vector<std::string> sentences;
  std::vector<SentenceKind> sentence_kinds;
  std::vector<std::string> entities;
  std::pair<std::string, std::string> query;
  RelationLabel target = RelationLabel::kFather;
  std::vector<NodeId> path_nodes;
  std::vector<PrimitiveStep> path_steps;
  uint64_t graph_seed = 0;
};

// Serialized line for one example (one JSON object, no trailing newline).
std::string RecordJson(const GeneratedExample& example, const SubsetSpec& spec);
// Parses one line; throws std::runtime_error describing the schema problem.
DatasetRecord ParseRecordJson(std::string_view line);
std::vector<DatasetRecord> ReadRecords(const std::filesystem::path& path);

struct SubsetManifest {
  int k = 0;
  int n_train = 0;
  int n_test = 0;
  int distractors = 0;
  uint64_t master_seed = 0;
  uint64_t subset_seed = 0;
  std::map<std::string, int> train_labels;
  std::map<std::string, int> test_labels;
  // Test examples whose step sequence also occurs in train.
  int test_sequences_seen_in_train = 0;
  std::map<std::string, std::string> digests;  // relative file -> sha256
};

// Writes <out>/M<k>/{train,test}.{jsonl,csv} and returns the manifest entry.
SubsetManifest BuildSubset(const SubsetSpec& spec,
                           const std::filesystem::path& out_dir);

struct DatasetManifest {
  std::string version{kDatasetVersion};
  uint64_t master_seed = 0;
  std::vector<SubsetManifest> subsets;
};

// Builds one subset per k in `ks` (seeds derived from master_seed) and
// writes <out>/manifest.json. `base` supplies every other field.
DatasetManifest BuildDataset(const std::vector<int>& ks, SubsetSpec base,
                             uint64_t master_seed,
                             const std::filesystem::path& out_dir);

// The four default subsets k = 3..6 with 5000 stories each, 4000/1000.
DatasetManifest BuildV01(uint64_t master_seed,
                         const std::filesystem::path& out_dir);

std::string ManifestJson(const DatasetManifest& manifest);
DatasetManifest ReadManifest(const std::filesystem::path& path);

struct Violation {
  std::string file;
  std::string record_id;  // empty for file-level problems
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  int64_t records = 0;
  int64_t oracle_correct = 0;
  bool ok() const { return violations.empty(); }
};

// Re-checks schema, sentence-count law, split sizes, id uniqueness, oracle
// accuracy (must be 100%) and file digests of a dataset directory.
ValidationReport ValidateDataset(const std::filesystem::path& dir);

}  // namespace kinforge

#endif  // KINFORGE_DATASET_H_
