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

#ifndef KINFORGE_PATH_SAMPLER_H_
#define KINFORGE_PATH_SAMPLER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kinforge/kinship_graph.h"
#include "kinforge/relation_algebra.h"

namespace kinforge {

// A family graph plus the relation deduced for every non-adjacent pair
// whose shortest primitive path composes to a defined term.
class SaturatedGraph {
 public:
  const FamilyGraph& base() const { return base_; }
  size_t size() const { return base_.size(); }
  const std::vector<std::vector<StepEdge>>& adjacency() const { return adj_; }

  std::optional<KinTerm> deduced(NodeId u, NodeId v) const {
    return deduced_[Index(u, v)];
  }
  std::optional<PrimitiveStep> primitive(NodeId u, NodeId v) const {
    return primitive_[Index(u, v)];
  }
  size_t deduced_count() const;
  // Pairs whose shortest paths composed to two different defined terms.
  // Always zero for a sound composition table.
  size_t conflicts() const { return conflicts_; }

 private:
  friend SaturatedGraph Saturate(FamilyGraph graph,
                                 const CompositionTable& table);
  size_t Index(NodeId u, NodeId v) const {
    return static_cast<size_t>(u) * base_.size() + static_cast<size_t>(v);
  }

  FamilyGraph base_;
  std::vector<std::vector<StepEdge>> adj_;
  std::vector<std::optional<KinTerm>> deduced_;
  std::vector<std::optional<PrimitiveStep>> primitive_;
  size_t conflicts_ = 0;
};

// Derives sibling edges if needed, then runs one BFS per node and folds the
// composition table along every shortest path.
SaturatedGraph Saturate(
    FamilyGraph graph,
    const CompositionTable& table = CompositionTable::Default());

struct RelationPath {
  std::vector<NodeId> nodes;          // k + 1 distinct nodes
  std::vector<PrimitiveStep> steps;   // steps[i] relates nodes[i] to nodes[i+1]
  KinTerm target_term = KinTerm::kParent;
  RelationLabel target_label = RelationLabel::kFather;

  int k() const { return static_cast<int>(steps.size()); }
  bool operator==(const RelationPath&) const = default;
};

// All simple primitive paths of exactly k steps whose composition is
// defined, surfaceable for the first node's gender, and whose endpoints
// share no primitive edge. Deterministic order (start node, then adjacency
// order).
std::vector<RelationPath> EnumerateCandidatePaths(
    const SaturatedGraph& graph, int k,
    const CompositionTable& table = CompositionTable::Default());

struct PathSample {
  std::vector<RelationPath> paths;
  size_t candidates = 0;
  // Fewer than the requested number of paths were available.
  bool exhausted = false;
};

// Uniform sample without replacement of up to n candidate paths.
// Throws ConfigError for k < 2 or n < 1.
PathSample SamplePaths(
    const SaturatedGraph& graph, int k, size_t n, uint64_t seed,
    const CompositionTable& table = CompositionTable::Default());

}  // namespace kinforge

#endif  // KINFORGE_PATH_SAMPLER_H_
