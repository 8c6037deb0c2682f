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

#ifndef KINFORGE_RELATION_ALGEBRA_H_
#define KINFORGE_RELATION_ALGEBRA_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kinforge/kinship_graph.h"

namespace kinforge {

// One edge of a family graph read from its first endpoint: a step on the
// ordered pair (u, v) names u's role with respect to v. kParentOf means u
// is v's parent.
enum class PrimitiveStep : uint8_t { kParentOf, kChildOf, kSpouseOf, kSiblingOf };
inline constexpr int kNumPrimitiveSteps = 4;
inline constexpr std::array<PrimitiveStep, kNumPrimitiveSteps> kAllSteps = {
    PrimitiveStep::kParentOf, PrimitiveStep::kChildOf,
    PrimitiveStep::kSpouseOf, PrimitiveStep::kSiblingOf};

// Ungendered kinship term. Like steps, it names the first person's role.
enum class KinTerm : uint8_t {
  kParent,
  kChild,
  kSpouse,
  kSibling,
  kGrandparent,
  kGrandchild,
  kParentInLaw,
  kChildInLaw,
};
inline constexpr int kNumKinTerms = 8;
inline constexpr std::array<KinTerm, kNumKinTerms> kAllKinTerms = {
    KinTerm::kParent,      KinTerm::kChild,      KinTerm::kSpouse,
    KinTerm::kSibling,     KinTerm::kGrandparent, KinTerm::kGrandchild,
    KinTerm::kParentInLaw, KinTerm::kChildInLaw};

// The 15 gendered class labels.
enum class RelationLabel : uint8_t {
  kFather,
  kMother,
  kSon,
  kDaughter,
  kHusband,
  kWife,
  kGrandfather,
  kGrandmother,
  kGrandson,
  kGranddaughter,
  kBrother,
  kSister,
  kFatherInLaw,
  kMotherInLaw,
  kSonInLaw,
};
inline constexpr int kNumRelationLabels = 15;
std::span<const RelationLabel> AllRelationLabels();

std::string_view StepName(PrimitiveStep s);
std::string_view KinTermName(KinTerm t);
std::string_view LabelName(RelationLabel l);
std::optional<PrimitiveStep> ParseStep(std::string_view text);
std::optional<KinTerm> ParseKinTerm(std::string_view text);
std::optional<RelationLabel> ParseLabel(std::string_view text);

KinTerm Lift(PrimitiveStep s);
// Steps are exactly the terms Parent/Child/Spouse/Sibling.
std::optional<PrimitiveStep> AsStep(KinTerm t);
PrimitiveStep Invert(PrimitiveStep s);
// Involution: Parent<->Child, Grandparent<->Grandchild,
// ParentInLaw<->ChildInLaw; Spouse and Sibling are self-inverse.
KinTerm Invert(KinTerm t);

// Gendered label naming the first person's role. nullopt when R has no
// word for it (a female child-in-law).
std::optional<RelationLabel> SurfaceLabel(KinTerm term, Gender subject);

struct GenderedTerm {
  KinTerm term;
  Gender gender;
};
// Inverse of SurfaceLabel; total over RelationLabel.
GenderedTerm Unsurface(RelationLabel label);

// Total map (KinTerm x PrimitiveStep) -> KinTerm | undefined.
//
// Cell (t, s): the first person holds role t towards w, w holds role s
// towards x, and x is not the first person (paths are simple). The cell is
// x-relative role of the first person, or undefined when that role is not
// a KinTerm or is not determined by (t, s) alone.
class CompositionTable {
 public:
  // Parses "term,step,result" lines; result may be "undefined". Every one of
  // the 32 cells must appear exactly once. '#' starts a comment.
  static CompositionTable Parse(std::string_view text,
                                std::string_view origin);
  // The table shipped in assets/composition_table.txt.
  static const CompositionTable& Default();

  std::optional<KinTerm> Compose(KinTerm term, PrimitiveStep step) const {
    return cells_[Index(term, step)];
  }

  // Canonical text form; Parse(Serialize()) reproduces the table.
  std::string Serialize() const;

  bool operator==(const CompositionTable&) const = default;

 private:
  static constexpr size_t Index(KinTerm t, PrimitiveStep s) {
    return static_cast<size_t>(t) * kNumPrimitiveSteps + static_cast<size_t>(s);
  }
  std::array<std::optional<KinTerm>, kNumKinTerms * kNumPrimitiveSteps>
      cells_{};
};

// Left fold of the table starting from Lift(steps[0]). Throws
// std::invalid_argument on an empty list.
std::optional<KinTerm> ComposePath(
    std::span<const PrimitiveStep> steps,
    const CompositionTable& table = CompositionTable::Default());

struct DefinedSequence {
  std::vector<PrimitiveStep> steps;
  KinTerm target;
};

// The distinct step sequences behind CountUniqueSequences, sorted by key.
std::vector<DefinedSequence> UniqueSequences(
    int k, const GenConfig& config,
    const CompositionTable& table = CompositionTable::Default());

struct SequenceCount {
  int64_t ungendered = 0;
  int64_t gendered = 0;
};
inline constexpr int kMinCountLength = 2;
inline constexpr int kMaxCountLength = 8;

// Distinct step sequences of length k realised by simple paths in families
// shaped by `config`, restricted to sequences whose composition is defined.
// `gendered` counts (sequence, target label) pairs over both genders of the
// first person, so it is 2 * ungendered minus the female child-in-law cases.
//
// Every family the config can produce is an induced subgraph of the regular
// family with max_children per couple, so that one shape is enumerated.
// Throws ConfigError when k is outside [2, 8].
SequenceCount CountUniqueSequences(
    int k, const GenConfig& config,
    const CompositionTable& table = CompositionTable::Default());

struct StepEdge {
  NodeId to;
  PrimitiveStep step;  // role of the source node towards `to`
};
// Per-node outgoing primitive edges, ordered by (to, step). Requires sibling
// edges to be derived.
std::vector<std::vector<StepEdge>> BuildStepAdjacency(const FamilyGraph& g);

// Packs a step sequence into an integer key: a leading 1, then one base-4
// digit per step.
uint64_t SequenceKey(std::span<const PrimitiveStep> steps);

}  // namespace kinforge

#endif  // KINFORGE_RELATION_ALGEBRA_H_
