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

#ifndef KINFORGE_KINSHIP_GRAPH_H_
#define KINFORGE_KINSHIP_GRAPH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kinforge {

enum class Gender : uint8_t { kFemale, kMale };

inline Gender Opposite(Gender g) {
  return g == Gender::kFemale ? Gender::kMale : Gender::kFemale;
}
std::string_view GenderName(Gender g);
std::optional<Gender> ParseGender(std::string_view text);

using NodeId = int;

struct PersonNode {
  NodeId id = 0;
  Gender gender = Gender::kFemale;
  std::string name;
  // Generation index; the head couple sits at level 0.
  int level = 0;
  // Distractor attributes, keyed by attribute name. Empty in a freshly
  // generated graph; the story renderer fills a per-story copy.
  std::map<std::string, std::string> attributes;
};

struct GenConfig {
  // Number of child generations produced below the head couple.
  int max_levels = 3;
  int min_children = 1;
  int max_children = 3;
  uint64_t seed = 0;

  // Throws ConfigError unless max_levels >= 1 and
  // 1 <= min_children <= max_children.
  void Validate() const;
};

// A generated genealogy. Immutable once built; share freely across threads.
//
// Edge sets are stored sorted: parent edges as (parent, child), spouse and
// sibling edges as (smaller id, larger id).
class FamilyGraph {
 public:
  FamilyGraph() = default;
  FamilyGraph(std::vector<PersonNode> nodes,
              std::vector<std::pair<NodeId, NodeId>> parent_edges,
              std::vector<std::pair<NodeId, NodeId>> spouse_edges,
              uint64_t seed);

  const std::vector<PersonNode>& nodes() const { return nodes_; }
  const PersonNode& node(NodeId id) const { return nodes_.at(id); }
  size_t size() const { return nodes_.size(); }
  uint64_t seed() const { return seed_; }

  const std::vector<std::pair<NodeId, NodeId>>& parent_edges() const {
    return parent_edges_;
  }
  const std::vector<std::pair<NodeId, NodeId>>& spouse_edges() const {
    return spouse_edges_;
  }
  const std::vector<std::pair<NodeId, NodeId>>& sibling_edges() const {
    return sibling_edges_;
  }
  bool siblings_derived() const { return siblings_derived_; }

  const std::vector<NodeId>& parents(NodeId id) const {
    return parents_.at(id);
  }
  const std::vector<NodeId>& children(NodeId id) const {
    return children_.at(id);
  }
  const std::vector<NodeId>& siblings(NodeId id) const {
    return siblings_.at(id);
  }
  std::optional<NodeId> spouse(NodeId id) const;

  int max_level() const;

  // Text dump: node table "<id>,<gender>,<level>,<name>", then
  // "<parent> parent-of <child>" and "<a> spouse-of <b>" lines.
  std::string DebugDump() const;

 private:
  friend FamilyGraph DeriveSiblingEdges(FamilyGraph graph);

  void BuildIndex();

  std::vector<PersonNode> nodes_;
  std::vector<std::pair<NodeId, NodeId>> parent_edges_;
  std::vector<std::pair<NodeId, NodeId>> spouse_edges_;
  std::vector<std::pair<NodeId, NodeId>> sibling_edges_;
  std::vector<std::vector<NodeId>> parents_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<std::vector<NodeId>> siblings_;
  std::vector<NodeId> spouse_;
  uint64_t seed_ = 0;
  bool siblings_derived_ = false;
};

// Builds a family top-down: a head node, then for each generation every
// member of the current parent list gets an opposite-sex partner and
// Between(min_children, max_children) children of uniform random gender.
// Names come from the gendered pools without repetition inside the graph.
// The result already has sibling edges derived.
FamilyGraph GenerateFamilyGraph(const GenConfig& config);

// Same procedure without names or randomness in the structure: every couple
// gets exactly `children` children, genders alternate. Used for exhaustive
// counting where only the shape matters.
FamilyGraph GenerateRegularFamily(int max_levels, int children);

// Sets sibling_edges to every unordered pair sharing at least one parent.
// Idempotent.
FamilyGraph DeriveSiblingEdges(FamilyGraph graph);

}  // namespace kinforge

#endif  // KINFORGE_KINSHIP_GRAPH_H_
