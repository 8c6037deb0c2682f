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

#include "kinforge/path_sampler.h"

#include <algorithm>
#include <bitset>
#include <stdexcept>
#include <string>

#include "kinforge/errors.h"
#include "kinforge/random.h"

namespace kinforge {
namespace {

// Set of fold results reachable along shortest paths: one bit per KinTerm
// plus one for "undefined".
using TermSet = std::bitset<kNumKinTerms + 1>;
constexpr size_t kUndefinedBit = kNumKinTerms;

size_t Bit(std::optional<KinTerm> t) {
  return t ? static_cast<size_t>(*t) : kUndefinedBit;
}

}  // namespace

size_t SaturatedGraph::deduced_count() const {
  return static_cast<size_t>(
      std::count_if(deduced_.begin(), deduced_.end(),
                    [](const auto& t) { return t.has_value(); }));
}

SaturatedGraph Saturate(FamilyGraph graph, const CompositionTable& table) {
  if (!graph.siblings_derived()) graph = DeriveSiblingEdges(std::move(graph));

  SaturatedGraph sg;
  sg.base_ = std::move(graph);
  sg.adj_ = BuildStepAdjacency(sg.base_);
  const size_t n = sg.base_.size();
  sg.deduced_.assign(n * n, std::nullopt);
  sg.primitive_.assign(n * n, std::nullopt);
  for (NodeId u = 0; u < static_cast<NodeId>(n); ++u) {
    for (const StepEdge& e : sg.adj_[u]) sg.primitive_[sg.Index(u, e.to)] = e.step;
  }

  std::vector<int> dist(n);
  std::vector<TermSet> reach(n);
  std::vector<NodeId> order;
  order.reserve(n);
  for (NodeId u = 0; u < static_cast<NodeId>(n); ++u) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(reach.begin(), reach.end(), TermSet());
    order.clear();
    dist[u] = 0;
    order.push_back(u);
    for (size_t head = 0; head < order.size(); ++head) {
      NodeId w = order[head];
      for (const StepEdge& e : sg.adj_[w]) {
        if (dist[e.to] < 0) {
          dist[e.to] = dist[w] + 1;
          order.push_back(e.to);
        }
        if (dist[e.to] != dist[w] + 1) continue;
        // e lies on a shortest path from u to e.to.
        if (w == u) {
          reach[e.to].set(Bit(Lift(e.step)));
          continue;
        }
        for (size_t b = 0; b <= kNumKinTerms; ++b) {
          if (!reach[w].test(b)) continue;
          if (b == kUndefinedBit) {
            reach[e.to].set(kUndefinedBit);
          } else {
            reach[e.to].set(Bit(table.Compose(static_cast<KinTerm>(b), e.step)));
          }
        }
      }
    }
    for (NodeId v : order) {
      if (dist[v] < 2) continue;  // self and primitive neighbours
      TermSet defined = reach[v];
      defined.reset(kUndefinedBit);
      if (defined.none()) continue;
      if (defined.count() > 1) {
        ++sg.conflicts_;
        continue;
      }
      for (size_t b = 0; b < kNumKinTerms; ++b) {
        if (defined.test(b)) sg.deduced_[sg.Index(u, v)] = static_cast<KinTerm>(b);
      }
    }
  }
  return sg;
}

namespace {

struct CandidateWalker {
  const SaturatedGraph& graph;
  const CompositionTable& table;
  int k;
  std::vector<char> on_path;
  std::vector<NodeId> nodes;
  std::vector<PrimitiveStep> steps;
  std::vector<RelationPath> out;

  void Walk(KinTerm term) {
    const NodeId at = nodes.back();
    if (static_cast<int>(steps.size()) == k) {
      Emit(term);
      return;
    }
    for (const StepEdge& e : graph.adjacency()[at]) {
      if (on_path[e.to]) continue;
      std::optional<KinTerm> next =
          steps.empty() ? Lift(e.step) : table.Compose(term, e.step);
      if (!next) continue;
      on_path[e.to] = 1;
      nodes.push_back(e.to);
      steps.push_back(e.step);
      Walk(*next);
      steps.pop_back();
      nodes.pop_back();
      on_path[e.to] = 0;
    }
  }

  void Emit(KinTerm term) {
    const NodeId first = nodes.front();
    const NodeId last = nodes.back();
    // The target relation must not be stated by a story sentence.
    if (graph.primitive(first, last)) return;
    auto label = SurfaceLabel(term, graph.base().node(first).gender);
    if (!label) return;
    if (graph.deduced(first, last) != term) {
      throw std::logic_error(
          "composition disagrees with saturation for pair (" +
          std::to_string(first) + ", " + std::to_string(last) + ")");
    }
    out.push_back(RelationPath{nodes, steps, term, *label});
  }
};

}  // namespace

std::vector<RelationPath> EnumerateCandidatePaths(const SaturatedGraph& graph,
                                                  int k,
                                                  const CompositionTable& table) {
  if (k < 1) throw ConfigError("path length must be >= 1");
  CandidateWalker walker{graph, table, k, std::vector<char>(graph.size()),
                         {}, {}, {}};
  for (NodeId start = 0; start < static_cast<NodeId>(graph.size()); ++start) {
    walker.on_path[start] = 1;
    walker.nodes.assign(1, start);
    walker.Walk(KinTerm::kParent);
    walker.on_path[start] = 0;
  }
  return std::move(walker.out);
}

PathSample SamplePaths(const SaturatedGraph& graph, int k, size_t n,
                       uint64_t seed, const CompositionTable& table) {
  if (k < 2) throw ConfigError("k must be >= 2, got " + std::to_string(k));
  if (n < 1) throw ConfigError("n must be >= 1");
  PathSample sample;
  std::vector<RelationPath> candidates =
      EnumerateCandidatePaths(graph, k, table);
  sample.candidates = candidates.size();
  sample.exhausted = candidates.size() < n;
  Rng rng(seed);
  const size_t take = std::min(n, candidates.size());
  rng.PartialShuffle(candidates, take);
  candidates.resize(take);
  sample.paths = std::move(candidates);
  return sample;
}

}  // namespace kinforge
