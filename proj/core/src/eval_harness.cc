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

#include "kinforge/eval_harness.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kinforge/assets.h"
#include "kinforge/dataset.h"

namespace kinforge {
namespace {

// Splits one CSV line, honouring double-quoted fields.
std::vector<std::string> SplitCsv(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back().push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back().push_back(c);
    }
  }
  return fields;
}

std::string Percent(std::optional<double> v) {
  if (!v) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", *v * 100.0);
  return buf;
}

}  // namespace

double Score(std::span<const PredictionRecord> predictions) {
  if (predictions.empty()) throw std::invalid_argument("no predictions to score");
  std::set<std::string_view> ids;
  size_t correct = 0;
  for (const auto& p : predictions) {
    if (!ids.insert(p.id).second) {
      throw std::invalid_argument("duplicate prediction id " + p.id);
    }
    if (p.predicted == p.gold) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(predictions.size());
}

std::vector<std::pair<std::string, std::string>> ReadPredictionCsv(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    auto fields = SplitCsv(line);
    if (fields.size() < 2) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                  ": expected id,predicted");
    }
    if (line_no == 1 && fields[0] == "id") continue;
    out.emplace_back(fields[0], fields[1]);
  }
  return out;
}

std::map<std::string, RelationLabel> ReadGold(const std::filesystem::path& path) {
  std::map<std::string, RelationLabel> gold;
  if (path.extension() == ".jsonl") {
    for (const auto& r : ReadRecords(path)) gold[r.id] = r.target;
    return gold;
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::string line;
  std::getline(in, line);
  const auto header = SplitCsv(line);
  size_t id_col = 0;
  size_t target_col = header.size();
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "id") id_col = i;
    if (header[i] == "target") target_col = i;
  }
  if (target_col == header.size()) {
    throw std::invalid_argument(path.string() + ": no 'target' column");
  }
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    auto fields = SplitCsv(line);
    if (fields.size() <= std::max(id_col, target_col)) {
      throw std::invalid_argument(path.string() + ": short row");
    }
    auto label = ParseLabel(fields[target_col]);
    if (!label) {
      throw std::invalid_argument(path.string() + ": unknown label '" +
                                  fields[target_col] + "'");
    }
    gold[fields[id_col]] = *label;
  }
  return gold;
}

std::vector<PredictionRecord> JoinPredictions(
    const std::map<std::string, RelationLabel>& gold,
    const std::vector<std::pair<std::string, std::string>>& predicted) {
  std::vector<PredictionRecord> out;
  out.reserve(predicted.size());
  for (const auto& [id, text] : predicted) {
    auto label = ParseLabel(text);
    if (!label) {
      throw std::invalid_argument("unknown label '" + text + "' for id " + id);
    }
    auto it = gold.find(id);
    if (it == gold.end()) throw std::invalid_argument("id " + id + " not in gold");
    out.push_back({id, *label, it->second});
  }
  return out;
}

GeneralizationMatrix::GeneralizationMatrix(std::vector<int> train_ks,
                                           std::vector<int> test_ks)
    : train_ks_(std::move(train_ks)), test_ks_(std::move(test_ks)) {}

void GeneralizationMatrix::Set(int train_k, int test_k, double accuracy) {
  if (accuracy < 0.0 || accuracy > 1.0) {
    throw std::invalid_argument("accuracy outside [0, 1]");
  }
  cells_[{train_k, test_k}] = accuracy;
}

std::optional<double> GeneralizationMatrix::Get(int train_k, int test_k) const {
  auto it = cells_.find({train_k, test_k});
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<int, int>> GeneralizationMatrix::holes() const {
  std::vector<std::pair<int, int>> out;
  for (int r : train_ks_) {
    for (int c : test_ks_) {
      if (!Get(r, c)) out.emplace_back(r, c);
    }
  }
  return out;
}

bool GeneralizationMatrix::complete() const { return holes().empty(); }

std::string GeneralizationMatrix::LayoutCsv(const std::string& model) const {
  std::string training = "Training";
  std::string testing = "Testing";
  std::string values = model;
  for (int r : train_ks_) {
    for (int c : test_ks_) {
      training += ",M" + std::to_string(r);
      testing += ",M" + std::to_string(c);
      values += "," + Percent(Get(r, c));
    }
  }
  return training + "\n" + testing + "\n" + values + "\n";
}

std::string GeneralizationMatrix::LayoutText(const std::string& model) const {
  std::ostringstream out;
  const int label_width = std::max<int>(8, static_cast<int>(model.size()));
  auto pad = [](const std::string& s, int w) {
    return s.size() >= static_cast<size_t>(w) ? s
                                              : std::string(w - s.size(), ' ') + s;
  };
  std::string training = "Training" + std::string(label_width - 8, ' ') + " |";
  std::string testing = "Testing" + std::string(label_width - 7, ' ') + " |";
  std::string values = model + std::string(label_width - model.size(), ' ') + " |";
  for (int r : train_ks_) {
    training += pad("M" + std::to_string(r), 6 * static_cast<int>(test_ks_.size())) + " |";
    for (int c : test_ks_) {
      testing += pad("M" + std::to_string(c), 6);
      values += pad(Percent(Get(r, c)), 6);
    }
    testing += " |";
    values += " |";
  }
  out << training << '\n' << testing << '\n' << values << '\n';
  return out.str();
}

std::string GeneralizationMatrix::LongCsv() const {
  std::string out = "train_k,test_j,accuracy\n";
  for (int r : train_ks_) {
    for (int c : test_ks_) {
      auto v = Get(r, c);
      char buf[32];
      if (v) {
        std::snprintf(buf, sizeof(buf), "%.6f", *v);
      } else {
        std::snprintf(buf, sizeof(buf), "NA");
      }
      out += std::to_string(r) + "," + std::to_string(c) + "," + buf + "\n";
    }
  }
  return out;
}

GeneralizationMatrix LoadGeneralizationMatrix(
    const std::filesystem::path& grid, const std::filesystem::path& gold_root,
    const std::vector<int>& ks) {
  GeneralizationMatrix matrix(ks, ks);
  std::map<int, std::map<std::string, RelationLabel>> gold;
  int found = 0;
  for (int r : ks) {
    for (int c : ks) {
      const auto file = grid / ("train" + std::to_string(r) + "_test" +
                                std::to_string(c) + ".csv");
      if (!std::filesystem::exists(file)) continue;
      ++found;
      if (!gold.contains(c)) {
        auto gold_file = gold_root / ("M" + std::to_string(c)) / "test.jsonl";
        if (!std::filesystem::exists(gold_file)) {
          gold_file = gold_root / ("M" + std::to_string(c)) / "test.csv";
        }
        gold[c] = ReadGold(gold_file);
      }
      auto records = JoinPredictions(gold[c], ReadPredictionCsv(file));
      if (records.size() != gold[c].size()) {
        throw std::invalid_argument(file.string() + " covers " +
                                    std::to_string(records.size()) + " of " +
                                    std::to_string(gold[c].size()) +
                                    " test examples");
      }
      matrix.Set(r, c, Score(records));
    }
  }
  if (found == 0) {
    throw std::invalid_argument("no prediction files under " + grid.string());
  }
  return matrix;
}

}  // namespace kinforge
