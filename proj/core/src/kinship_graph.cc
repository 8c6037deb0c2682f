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

#include "kinforge/kinship_graph.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "kinforge/assets.h"
#include "kinforge/errors.h"
#include "kinforge/random.h"

namespace kinforge {

std::string_view GenderName(Gender g) {
  return g == Gender::kFemale ? "female" : "male";
}

std::optional<Gender> ParseGender(std::string_view text) {
  if (text == "female") return Gender::kFemale;
  if (text == "male") return Gender::kMale;
  return std::nullopt;
}

void GenConfig::Validate() const {
  if (max_levels < 1) {
    throw ConfigError("max_levels must be >= 1, got " +
                      std::to_string(max_levels));
  }
  if (min_children < 1) {
    throw ConfigError("min_children must be >= 1, got " +
                      std::to_string(min_children));
  }
  if (min_children > max_children) {
    throw ConfigError("min_children (" + std::to_string(min_children) +
                      ") exceeds max_children (" +
                      std::to_string(max_children) + ")");
  }
}

FamilyGraph::FamilyGraph(std::vector<PersonNode> nodes,
                         std::vector<std::pair<NodeId, NodeId>> parent_edges,
                         std::vector<std::pair<NodeId, NodeId>> spouse_edges,
                         uint64_t seed)
    : nodes_(std::move(nodes)),
      parent_edges_(std::move(parent_edges)),
      spouse_edges_(std::move(spouse_edges)),
      seed_(seed) {
  for (auto& [a, b] : spouse_edges_) {
    if (a > b) std::swap(a, b);
  }
  std::sort(parent_edges_.begin(), parent_edges_.end());
  std::sort(spouse_edges_.begin(), spouse_edges_.end());
  BuildIndex();
}

void FamilyGraph::BuildIndex() {
  const size_t n = nodes_.size();
  parents_.assign(n, {});
  children_.assign(n, {});
  siblings_.assign(n, {});
  spouse_.assign(n, -1);
  for (auto [p, c] : parent_edges_) {
    parents_.at(c).push_back(p);
    children_.at(p).push_back(c);
  }
  for (auto [a, b] : spouse_edges_) {
    spouse_.at(a) = b;
    spouse_.at(b) = a;
  }
  for (auto [a, b] : sibling_edges_) {
    siblings_.at(a).push_back(b);
    siblings_.at(b).push_back(a);
  }
  for (auto* index : {&parents_, &children_, &siblings_}) {
    for (auto& list : *index) std::sort(list.begin(), list.end());
  }
}

std::optional<NodeId> FamilyGraph::spouse(NodeId id) const {
  NodeId s = spouse_.at(id);
  if (s < 0) return std::nullopt;
  return s;
}

int FamilyGraph::max_level() const {
  int level = 0;
  for (const auto& n : nodes_) level = std::max(level, n.level);
  return level;
}

std::string FamilyGraph::DebugDump() const {
  std::ostringstream out;
  for (const auto& n : nodes_) {
    out << n.id << ',' << GenderName(n.gender) << ',' << n.level << ','
        << n.name << '\n';
  }
  for (auto [p, c] : parent_edges_) out << p << " parent-of " << c << '\n';
  for (auto [a, b] : spouse_edges_) out << a << " spouse-of " << b << '\n';
  return out.str();
}

FamilyGraph DeriveSiblingEdges(FamilyGraph graph) {
  std::set<std::pair<NodeId, NodeId>> pairs;
  for (NodeId p = 0; p < static_cast<NodeId>(graph.size()); ++p) {
    const auto& kids = graph.children(p);
    for (size_t i = 0; i < kids.size(); ++i) {
      for (size_t j = i + 1; j < kids.size(); ++j) {
        pairs.emplace(std::min(kids[i], kids[j]), std::max(kids[i], kids[j]));
      }
    }
  }
  graph.sibling_edges_.assign(pairs.begin(), pairs.end());
  graph.siblings_derived_ = true;
  graph.BuildIndex();
  return graph;
}

namespace {

class NamePicker {
 public:
  explicit NamePicker(Rng& rng) : rng_(rng) {}

  std::string Pick(Gender g) {
    const auto& pool = g == Gender::kFemale ? FemaleNames() : MaleNames();
    auto& used = g == Gender::kFemale ? used_female_ : used_male_;
    if (used.size() >= pool.size()) {
      throw ConfigError("name pool for " + std::string(GenderName(g)) +
                        " exhausted (" + std::to_string(pool.size()) +
                        " names); reduce max_levels or max_children");
    }
    for (;;) {
      const std::string& candidate = pool[rng_.Below(pool.size())];
      if (used.insert(candidate).second) return candidate;
    }
  }

 private:
  Rng& rng_;
  std::set<std::string> used_female_;
  std::set<std::string> used_male_;
};

// Shared skeleton of the top-down procedure. `child_count` and `gender_of`
// supply the only sources of variation.
template <typename ChildCount, typename ChildGender, typename Namer>
FamilyGraph Grow(int max_levels, Gender head_gender, uint64_t seed,
                 ChildCount child_count, ChildGender child_gender,
                 Namer name_for) {
  std::vector<PersonNode> nodes;
  std::vector<std::pair<NodeId, NodeId>> parent_edges;
  std::vector<std::pair<NodeId, NodeId>> spouse_edges;

  auto add = [&](Gender g, int level) {
    PersonNode n;
    n.id = static_cast<NodeId>(nodes.size());
    n.gender = g;
    n.level = level;
    n.name = name_for(g);
    nodes.push_back(std::move(n));
    return nodes.back().id;
  };

  std::vector<NodeId> parents{add(head_gender, 0)};
  for (int level = 0; level < max_levels; ++level) {
    std::vector<NodeId> next;
    for (NodeId p : parents) {
      const Gender pg = nodes[p].gender;
      const int pl = nodes[p].level;
      NodeId partner = add(Opposite(pg), pl);
      spouse_edges.emplace_back(p, partner);
      const int count = child_count();
      for (int i = 0; i < count; ++i) {
        NodeId c = add(child_gender(i), pl + 1);
        parent_edges.emplace_back(p, c);
        parent_edges.emplace_back(partner, c);
        next.push_back(c);
      }
    }
    parents = std::move(next);
  }
  return DeriveSiblingEdges(FamilyGraph(std::move(nodes),
                                        std::move(parent_edges),
                                        std::move(spouse_edges), seed));
}

}  // namespace

FamilyGraph GenerateFamilyGraph(const GenConfig& config) {
  config.Validate();
  Rng rng(config.seed);
  NamePicker names(rng);
  const Gender head = rng.Coin() ? Gender::kMale : Gender::kFemale;
  return Grow(
      config.max_levels, head, config.seed,
      [&] {
        return static_cast<int>(
            rng.Between(config.min_children, config.max_children));
      },
      [&](int) { return rng.Coin() ? Gender::kMale : Gender::kFemale; },
      [&](Gender g) { return names.Pick(g); });
}

FamilyGraph GenerateRegularFamily(int max_levels, int children) {
  GenConfig check{max_levels, children, children, 0};
  check.Validate();
  return Grow(
      max_levels, Gender::kFemale, 0, [&] { return children; },
      [](int i) { return i % 2 == 0 ? Gender::kFemale : Gender::kMale; },
      [](Gender) { return std::string(); });
}

}  // namespace kinforge
