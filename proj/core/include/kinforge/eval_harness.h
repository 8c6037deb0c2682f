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

#ifndef KINFORGE_EVAL_HARNESS_H_
#define KINFORGE_EVAL_HARNESS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kinforge/relation_algebra.h"

namespace kinforge {

struct PredictionRecord {
  std::string id;
  RelationLabel predicted;
  RelationLabel gold;
};

// Fraction of correct predictions. Throws std::invalid_argument on an empty
// list or duplicate ids.
double Score(std::span<const PredictionRecord> predictions);

// Reads "id,predicted" CSV (header optional). Labels are kept as text.
std::vector<std::pair<std::string, std::string>> ReadPredictionCsv(
    const std::filesystem::path& path);

// Gold labels keyed by id, from a dataset .jsonl file or its .csv view.
std::map<std::string, RelationLabel> ReadGold(const std::filesystem::path& path);

// Joins predictions to gold labels. Throws std::invalid_argument for labels
// outside the label set or ids missing from the gold file.
std::vector<PredictionRecord> JoinPredictions(
    const std::map<std::string, RelationLabel>& gold,
    const std::vector<std::pair<std::string, std::string>>& predicted);

// Accuracy of a model trained on subset `train` and tested on `test`.
// Missing cells stay empty rather than reading as zero.
class GeneralizationMatrix {
 public:
  GeneralizationMatrix(std::vector<int> train_ks, std::vector<int> test_ks);

  const std::vector<int>& train_ks() const { return train_ks_; }
  const std::vector<int>& test_ks() const { return test_ks_; }

  void Set(int train_k, int test_k, double accuracy);
  std::optional<double> Get(int train_k, int test_k) const;
  bool complete() const;
  std::vector<std::pair<int, int>> holes() const;

  // Two header rows ("Training", "Testing") then one row of percentages for
  // `model`, one column per (train, test) cell. Holes print as "NA".
  std::string LayoutCsv(const std::string& model) const;
  // The same layout as an aligned text table.
  std::string LayoutText(const std::string& model) const;
  // "train_k,test_j,accuracy" rows, the data behind a per-row area plot.
  std::string LongCsv() const;

 private:
  std::vector<int> train_ks_;
  std::vector<int> test_ks_;
  std::map<std::pair<int, int>, double> cells_;
};

inline const std::vector<int>& DefaultSubsetKs() {
  static const std::vector<int> ks{3, 4, 5, 6};
  return ks;
}

// Loads the grid of prediction files "<grid>/train<k>_test<j>.csv" and
// scores each against "<gold_root>/M<j>/test.jsonl". Throws
// std::invalid_argument when no prediction file exists at all.
GeneralizationMatrix LoadGeneralizationMatrix(
    const std::filesystem::path& grid, const std::filesystem::path& gold_root,
    const std::vector<int>& ks = DefaultSubsetKs());

}  // namespace kinforge

#endif  // KINFORGE_EVAL_HARNESS_H_
