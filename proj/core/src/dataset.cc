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

#include "kinforge/dataset.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "kinforge/digest.h"
#include "kinforge/errors.h"
#include "kinforge/path_sampler.h"
#include "kinforge/random.h"
#include "kinforge/symbolic_oracle.h"

namespace kinforge {

using Json = nlohmann::ordered_json;

namespace {

// Stream tags for DeriveSeed.
constexpr uint64_t kPathStream = 1;
constexpr uint64_t kRenderStream = 2;

std::string SubsetDirName(int k) { return "M" + std::to_string(k); }

std::string ExampleId(int k, size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "M%d-%06zu", k, index);
  return buf;
}

std::string_view KindName(SentenceKind kind) {
  return kind == SentenceKind::kRelation ? "relation" : "distractor";
}

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<GeneratedExample> ExamplesFromGraph(const SubsetSpec& spec,
                                                uint64_t graph_index) {
  const uint64_t subset_seed = spec.subset_seed();
  const uint64_t graph_seed = DeriveSeed(subset_seed, {graph_index});
  GenConfig gen = spec.gen;
  gen.seed = graph_seed;
  const SaturatedGraph sg = Saturate(GenerateFamilyGraph(gen));
  const uint64_t path_seed = DeriveSeed(graph_seed, {kPathStream});
  const PathSample sample = SamplePaths(
      sg, spec.k, static_cast<size_t>(spec.paths_per_graph), path_seed);

  std::vector<GeneratedExample> out;
  for (size_t j = 0; j < sample.paths.size(); ++j) {
    const uint64_t render_seed = DeriveSeed(graph_seed, {kRenderStream, j});
    Rng rng(render_seed);
    StoryExample named =
        RenderStory(sample.paths[j], sg.base(), TemplateDictionary::Default(),
                    AttributeDictionary::Default(), spec.distractors, rng);
    named.provenance.render_seed = render_seed;
    GeneratedExample ex;
    ex.story_named = named.Text();
    ex.anonymized = Anonymize(named, rng, spec.entity_pool);
    ex.seeds = {spec.master_seed, subset_seed, graph_index, graph_seed,
                path_seed, render_seed};
    out.push_back(std::move(ex));
  }
  return out;
}

}  // namespace

void SubsetSpec::Validate() const {
  if (k < 2) throw ConfigError("k must be >= 2, got " + std::to_string(k));
  if (n_stories < 1) throw ConfigError("n must be >= 1");
  if (!(train_fraction >= 0.0 && train_fraction <= 1.0)) {
    throw ConfigError("train fraction must be in [0, 1]");
  }
  if (distractors < 0 || distractors > static_cast<int>(kAttributeKeys.size())) {
    throw ConfigError("distractors must be in [0, " +
                      std::to_string(kAttributeKeys.size()) + "]");
  }
  if (paths_per_graph < 1) throw ConfigError("paths per graph must be >= 1");
  if (entity_pool < k + 1) {
    throw ConfigError("entity pool (" + std::to_string(entity_pool) +
                      ") smaller than path entity count " + std::to_string(k + 1));
  }
  GenConfig g = gen;
  g.Validate();
}

int SubsetSpec::n_train() const {
  return static_cast<int>(std::llround(n_stories * train_fraction));
}

uint64_t SubsetSpec::subset_seed() const {
  return DeriveSeed(master_seed, {static_cast<uint64_t>(k)});
}

std::vector<GeneratedExample> GenerateSubset(const SubsetSpec& spec) {
  spec.Validate();
  const size_t want = static_cast<size_t>(spec.n_stories);
  const size_t threads =
      spec.threads > 0 ? static_cast<size_t>(spec.threads)
                       : std::max<size_t>(1, std::thread::hardware_concurrency());
  const uint64_t max_graphs = std::max<uint64_t>(2000, 20 * want);
  const size_t batch = threads * 16;

  std::vector<GeneratedExample> examples;
  examples.reserve(want);
  uint64_t next_graph = 0;
  while (examples.size() < want) {
    if (next_graph >= max_graphs) {
      throw UnsatisfiableError(
          "generated " + std::to_string(examples.size()) + " of " +
              std::to_string(want) + " stories for k=" + std::to_string(spec.k) +
              " after " + std::to_string(max_graphs) + " graphs",
          static_cast<int>(examples.size()));
    }
    const uint64_t count = std::min<uint64_t>(batch, max_graphs - next_graph);
    std::vector<std::vector<GeneratedExample>> results(count);
    std::vector<std::exception_ptr> errors(threads);
    std::atomic<uint64_t> cursor{0};
    auto worker = [&](size_t t) {
      try {
        for (uint64_t i; (i = cursor.fetch_add(1)) < count;) {
          results[i] = ExamplesFromGraph(spec, next_graph + i);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (auto& r : results) {
      for (auto& ex : r) {
        if (examples.size() == want) break;
        examples.push_back(std::move(ex));
      }
    }
    next_graph += count;
  }
  for (size_t i = 0; i < examples.size(); ++i) {
    examples[i].anonymized.id = ExampleId(spec.k, i);
  }
  return examples;
}

std::string RecordJson(const GeneratedExample& example, const SubsetSpec& spec) {
  const StoryExample& ex = example.anonymized;
  Json j;
  j["id"] = ex.id;
  j["k"] = ex.k;
  j["d"] = ex.d;
  j["story_text"] = ex.Text();
  j["story_named"] = example.story_named;
  Json sentences = Json::array();
  Json kinds = Json::array();
  Json choices = Json::array();
  for (size_t i = 0; i < ex.story.size(); ++i) {
    sentences.push_back(ex.story[i].text);
    kinds.push_back(KindName(ex.story[i].kind));
    choices.push_back(ex.provenance.origins.at(i).template_index);
  }
  j["sentences"] = std::move(sentences);
  j["sentence_kinds"] = std::move(kinds);
  j["entities"] = ex.entities;
  j["query"] = {ex.query.first, ex.query.second};
  j["target"] = LabelName(ex.target);
  Json path;
  path["nodes"] = ex.provenance.path_nodes;
  Json steps = Json::array();
  for (PrimitiveStep s : ex.provenance.path_steps) steps.push_back(StepName(s));
  path["steps"] = std::move(steps);
  path["target_term"] = KinTermName(ex.target_term);
  j["path"] = std::move(path);
  Json seeds;
  seeds["master_seed"] = example.seeds.master_seed;
  seeds["subset_seed"] = example.seeds.subset_seed;
  seeds["graph_index"] = example.seeds.graph_index;
  seeds["graph_seed"] = example.seeds.graph_seed;
  seeds["path_seed"] = example.seeds.path_seed;
  seeds["render_seed"] = example.seeds.render_seed;
  seeds["gen"] = {{"max_levels", spec.gen.max_levels},
                  {"min_children", spec.gen.min_children},
                  {"max_children", spec.gen.max_children}};
  j["seed_info"] = std::move(seeds);
  j["template_choices"] = std::move(choices);
  Json entity_map = Json::object();
  for (const auto& [name, placeholder] : ex.provenance.entity_map) {
    entity_map[name] = placeholder;
  }
  j["entity_map"] = std::move(entity_map);
  return j.dump();
}

DatasetRecord ParseRecordJson(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(std::string("malformed JSON: ") + e.what());
  }
  DatasetRecord r;
  try {
    r.id = j.at("id").get<std::string>();
    r.k = j.at("k").get<int>();
    r.d = j.at("d").get<int>();
    r.story_text = j.at("story_text").get<std::string>();
    r.sentences = j.at("sentences").get<std::vector<std::string>>();
    for (const auto& kind : j.at("sentence_kinds")) {
      const auto name = kind.get<std::string>();
      if (name == "relation") {
        r.sentence_kinds.push_back(SentenceKind::kRelation);
      } else if (name == "distractor") {
        r.sentence_kinds.push_back(SentenceKind::kDistractor);
      } else {
        throw std::runtime_error("unknown sentence kind '" + name + "'");
      }
    }
    r.entities = j.at("entities").get<std::vector<std::string>>();
    const auto& q = j.at("query");
    if (!q.is_array() || q.size() != 2) throw std::runtime_error("query must be a pair");
    r.query = {q[0].get<std::string>(), q[1].get<std::string>()};
    const auto target = j.at("target").get<std::string>();
    auto label = ParseLabel(target);
    if (!label) throw std::runtime_error("target '" + target + "' not a relation label");
    r.target = *label;
    const auto& path = j.at("path");
    r.path_nodes = path.at("nodes").get<std::vector<NodeId>>();
    for (const auto& s : path.at("steps")) {
      auto step = ParseStep(s.get<std::string>());
      if (!step) throw std::runtime_error("unknown step " + s.dump());
      r.path_steps.push_back(*step);
    }
    r.graph_seed = j.at("seed_info").at("graph_seed").get<uint64_t>();
  } catch (const Json::exception& e) {
    throw std::runtime_error(std::string("schema: ") + e.what());
  }
  if (r.sentence_kinds.size() != r.sentences.size()) {
    throw std::runtime_error("sentence_kinds and sentences differ in length");
  }
  return r;
}

std::vector<DatasetRecord> ReadRecords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<DatasetRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(ParseRecordJson(line));
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": " + e.what());
    }
  }
  return out;
}

SubsetManifest BuildSubset(const SubsetSpec& spec,
                           const std::filesystem::path& out_dir) {
  const std::vector<GeneratedExample> examples = GenerateSubset(spec);
  const size_t n_train = static_cast<size_t>(spec.n_train());

  const std::filesystem::path dir = out_dir / SubsetDirName(spec.k);
  std::filesystem::create_directories(dir);

  SubsetManifest m;
  m.k = spec.k;
  m.n_train = static_cast<int>(n_train);
  m.n_test = static_cast<int>(examples.size() - n_train);
  m.distractors = spec.distractors;
  m.master_seed = spec.master_seed;
  m.subset_seed = spec.subset_seed();

  std::set<uint64_t> train_sequences;
  for (const char* split : {"train", "test"}) {
    const bool is_train = std::string_view(split) == "train";
    const size_t lo = is_train ? 0 : n_train;
    const size_t hi = is_train ? n_train : examples.size();
    std::string jsonl;
    std::string csv = "id,k,story_text,query_e1,query_e2,target\n";
    auto& histogram = is_train ? m.train_labels : m.test_labels;
    for (size_t i = lo; i < hi; ++i) {
      const StoryExample& ex = examples[i].anonymized;
      jsonl += RecordJson(examples[i], spec);
      jsonl += '\n';
      csv += CsvField(ex.id) + ',' + std::to_string(ex.k) + ',' +
             CsvField(ex.Text()) + ',' + CsvField(ex.query.first) + ',' +
             CsvField(ex.query.second) + ',' + std::string(LabelName(ex.target)) +
             '\n';
      ++histogram[std::string(LabelName(ex.target))];
      const uint64_t key = SequenceKey(ex.provenance.path_steps);
      if (is_train) {
        train_sequences.insert(key);
      } else if (train_sequences.contains(key)) {
        ++m.test_sequences_seen_in_train;
      }
    }
    const std::string base = std::string(split);
    WriteFile(dir / (base + ".jsonl"), jsonl);
    WriteFile(dir / (base + ".csv"), csv);
    m.digests[SubsetDirName(spec.k) + "/" + base + ".jsonl"] = Sha256Hex(jsonl);
    m.digests[SubsetDirName(spec.k) + "/" + base + ".csv"] = Sha256Hex(csv);
  }
  return m;
}

std::string ManifestJson(const DatasetManifest& manifest) {
  Json j;
  j["version"] = manifest.version;
  j["master_seed"] = manifest.master_seed;
  Json subsets = Json::array();
  for (const SubsetManifest& s : manifest.subsets) {
    Json e;
    e["k"] = s.k;
    e["n_train"] = s.n_train;
    e["n_test"] = s.n_test;
    e["distractors"] = s.distractors;
    e["master_seed"] = s.master_seed;
    e["subset_seed"] = s.subset_seed;
    e["label_histogram"] = {{"train", s.train_labels}, {"test", s.test_labels}};
    e["test_sequences_seen_in_train"] = s.test_sequences_seen_in_train;
    e["digests"] = s.digests;
    subsets.push_back(std::move(e));
  }
  j["subsets"] = std::move(subsets);
  return j.dump(2) + "\n";
}

DatasetManifest ReadManifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  DatasetManifest m;
  try {
    Json j = Json::parse(in);
    m.version = j.at("version").get<std::string>();
    m.master_seed = j.at("master_seed").get<uint64_t>();
    for (const auto& e : j.at("subsets")) {
      SubsetManifest s;
      s.k = e.at("k").get<int>();
      s.n_train = e.at("n_train").get<int>();
      s.n_test = e.at("n_test").get<int>();
      s.distractors = e.at("distractors").get<int>();
      s.master_seed = e.at("master_seed").get<uint64_t>();
      s.subset_seed = e.at("subset_seed").get<uint64_t>();
      s.train_labels = e.at("label_histogram").at("train").get<std::map<std::string, int>>();
      s.test_labels = e.at("label_histogram").at("test").get<std::map<std::string, int>>();
      s.test_sequences_seen_in_train = e.at("test_sequences_seen_in_train").get<int>();
      s.digests = e.at("digests").get<std::map<std::string, std::string>>();
      m.subsets.push_back(std::move(s));
    }
  } catch (const Json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  return m;
}

DatasetManifest BuildDataset(const std::vector<int>& ks, SubsetSpec base,
                             uint64_t master_seed,
                             const std::filesystem::path& out_dir) {
  if (ks.empty()) throw ConfigError("no subsets requested");
  std::filesystem::create_directories(out_dir);
  DatasetManifest manifest;
  manifest.master_seed = master_seed;
  base.master_seed = master_seed;
  for (int k : ks) {
    SubsetSpec spec = base;
    spec.k = k;
    manifest.subsets.push_back(BuildSubset(spec, out_dir));
  }
  WriteFile(out_dir / "manifest.json", ManifestJson(manifest));
  return manifest;
}

DatasetManifest BuildV01(uint64_t master_seed,
                         const std::filesystem::path& out_dir) {
  return BuildDataset({3, 4, 5, 6}, SubsetSpec{}, master_seed, out_dir);
}

ValidationReport ValidateDataset(const std::filesystem::path& dir) {
  ValidationReport report;
  auto flag = [&](std::string file, std::string id, std::string message) {
    report.violations.push_back({std::move(file), std::move(id), std::move(message)});
  };

  DatasetManifest manifest;
  try {
    manifest = ReadManifest(dir / "manifest.json");
  } catch (const std::exception& e) {
    flag("manifest.json", "", e.what());
    return report;
  }
  if (manifest.version != kDatasetVersion) {
    flag("manifest.json", "", "unsupported version '" + manifest.version + "'");
  }

  std::set<std::string> all_ids;
  for (const SubsetManifest& subset : manifest.subsets) {
    for (const auto& [file, digest] : subset.digests) {
      const auto path = dir / file;
      if (!std::filesystem::exists(path)) {
        flag(file, "", "missing file");
        continue;
      }
      if (Sha256File(path) != digest) flag(file, "", "digest mismatch");
    }

    std::set<std::pair<uint64_t, std::vector<NodeId>>> train_provenance;
    for (const char* split : {"train", "test"}) {
      const bool is_train = std::string_view(split) == "train";
      const std::string file = SubsetDirName(subset.k) + "/" + split + ".jsonl";
      std::ifstream in(dir / file);
      if (!in) {
        flag(file, "", "cannot open");
        continue;
      }
      int count = 0;
      int line_no = 0;
      std::string line;
      while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        ++count;
        ++report.records;
        DatasetRecord r;
        try {
          r = ParseRecordJson(line);
        } catch (const std::exception& e) {
          flag(file, "line " + std::to_string(line_no), e.what());
          continue;
        }
        if (!all_ids.insert(r.id).second) flag(file, r.id, "duplicate id");
        if (r.k != subset.k) flag(file, r.id, "k does not match subset");
        const size_t expected =
            static_cast<size_t>(r.k) + static_cast<size_t>(r.k + 1) * r.d;
        if (r.sentences.size() != expected) {
          flag(file, r.id, "has " + std::to_string(r.sentences.size()) +
                               " sentences, expected " + std::to_string(expected));
        }
        std::string joined;
        for (const auto& s : r.sentences) joined += (joined.empty() ? "" : " ") + s;
        if (joined != r.story_text) flag(file, r.id, "story_text does not match sentences");
        if (r.path_steps.size() != static_cast<size_t>(r.k) ||
            r.path_nodes.size() != static_cast<size_t>(r.k) + 1) {
          flag(file, r.id, "path length does not match k");
        }
        auto provenance = std::pair(r.graph_seed, r.path_nodes);
        if (is_train) {
          train_provenance.insert(provenance);
        } else if (train_provenance.contains(provenance)) {
          flag(file, r.id, "same graph and path as a train record");
        }
        try {
          const RelationLabel predicted =
              Solve(StoryParser::Default().Parse(r.sentences), r.query);
          if (predicted == r.target) {
            ++report.oracle_correct;
          } else {
            flag(file, r.id, "oracle answers '" + std::string(LabelName(predicted)) +
                                 "' but target is '" +
                                 std::string(LabelName(r.target)) + "'");
          }
        } catch (const std::exception& e) {
          flag(file, r.id, std::string("oracle failed: ") + e.what());
        }
      }
      const int expected_count = is_train ? subset.n_train : subset.n_test;
      if (count != expected_count) {
        flag(file, "", "has " + std::to_string(count) + " records, manifest says " +
                           std::to_string(expected_count));
      }
    }
  }
  return report;
}

}  // namespace kinforge
