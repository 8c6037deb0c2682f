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

#include "kinforge/relation_algebra.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "kinforge/assets.h"
#include "kinforge/errors.h"

namespace kinforge {
namespace {

constexpr std::array<std::string_view, kNumPrimitiveSteps> kStepNames = {
    "parent-of", "child-of", "spouse-of", "sibling-of"};

constexpr std::array<std::string_view, kNumKinTerms> kTermNames = {
    "parent",      "child",      "spouse",        "sibling",
    "grandparent", "grandchild", "parent-in-law", "child-in-law"};

constexpr std::array<std::string_view, kNumRelationLabels> kLabelNames = {
    "father",        "mother",      "son",         "daughter",
    "husband",       "wife",        "grandfather", "grandmother",
    "grandson",      "granddaughter", "brother",   "sister",
    "father-in-law", "mother-in-law", "son-in-law"};

constexpr std::array<RelationLabel, kNumRelationLabels> kLabels = {
    RelationLabel::kFather,      RelationLabel::kMother,
    RelationLabel::kSon,         RelationLabel::kDaughter,
    RelationLabel::kHusband,     RelationLabel::kWife,
    RelationLabel::kGrandfather, RelationLabel::kGrandmother,
    RelationLabel::kGrandson,    RelationLabel::kGranddaughter,
    RelationLabel::kBrother,     RelationLabel::kSister,
    RelationLabel::kFatherInLaw, RelationLabel::kMotherInLaw,
    RelationLabel::kSonInLaw};

template <typename Enum, size_t N>
std::optional<Enum> Lookup(const std::array<std::string_view, N>& names,
                           std::string_view text) {
  for (size_t i = 0; i < N; ++i) {
    if (names[i] == text) return static_cast<Enum>(i);
  }
  return std::nullopt;
}

}  // namespace

std::span<const RelationLabel> AllRelationLabels() { return kLabels; }

std::string_view StepName(PrimitiveStep s) {
  return kStepNames[static_cast<size_t>(s)];
}
std::string_view KinTermName(KinTerm t) {
  return kTermNames[static_cast<size_t>(t)];
}
std::string_view LabelName(RelationLabel l) {
  return kLabelNames[static_cast<size_t>(l)];
}
std::optional<PrimitiveStep> ParseStep(std::string_view text) {
  return Lookup<PrimitiveStep>(kStepNames, text);
}
std::optional<KinTerm> ParseKinTerm(std::string_view text) {
  return Lookup<KinTerm>(kTermNames, text);
}
std::optional<RelationLabel> ParseLabel(std::string_view text) {
  return Lookup<RelationLabel>(kLabelNames, text);
}

KinTerm Lift(PrimitiveStep s) {
  switch (s) {
    case PrimitiveStep::kParentOf: return KinTerm::kParent;
    case PrimitiveStep::kChildOf: return KinTerm::kChild;
    case PrimitiveStep::kSpouseOf: return KinTerm::kSpouse;
    case PrimitiveStep::kSiblingOf: return KinTerm::kSibling;
  }
  throw std::logic_error("bad PrimitiveStep");
}

std::optional<PrimitiveStep> AsStep(KinTerm t) {
  switch (t) {
    case KinTerm::kParent: return PrimitiveStep::kParentOf;
    case KinTerm::kChild: return PrimitiveStep::kChildOf;
    case KinTerm::kSpouse: return PrimitiveStep::kSpouseOf;
    case KinTerm::kSibling: return PrimitiveStep::kSiblingOf;
    default: return std::nullopt;
  }
}

PrimitiveStep Invert(PrimitiveStep s) {
  switch (s) {
    case PrimitiveStep::kParentOf: return PrimitiveStep::kChildOf;
    case PrimitiveStep::kChildOf: return PrimitiveStep::kParentOf;
    default: return s;
  }
}

KinTerm Invert(KinTerm t) {
  switch (t) {
    case KinTerm::kParent: return KinTerm::kChild;
    case KinTerm::kChild: return KinTerm::kParent;
    case KinTerm::kGrandparent: return KinTerm::kGrandchild;
    case KinTerm::kGrandchild: return KinTerm::kGrandparent;
    case KinTerm::kParentInLaw: return KinTerm::kChildInLaw;
    case KinTerm::kChildInLaw: return KinTerm::kParentInLaw;
    case KinTerm::kSpouse:
    case KinTerm::kSibling: return t;
  }
  throw std::logic_error("bad KinTerm");
}

std::optional<RelationLabel> SurfaceLabel(KinTerm term, Gender subject) {
  const bool male = subject == Gender::kMale;
  switch (term) {
    case KinTerm::kParent:
      return male ? RelationLabel::kFather : RelationLabel::kMother;
    case KinTerm::kChild:
      return male ? RelationLabel::kSon : RelationLabel::kDaughter;
    case KinTerm::kSpouse:
      return male ? RelationLabel::kHusband : RelationLabel::kWife;
    case KinTerm::kSibling:
      return male ? RelationLabel::kBrother : RelationLabel::kSister;
    case KinTerm::kGrandparent:
      return male ? RelationLabel::kGrandfather : RelationLabel::kGrandmother;
    case KinTerm::kGrandchild:
      return male ? RelationLabel::kGrandson : RelationLabel::kGranddaughter;
    case KinTerm::kParentInLaw:
      return male ? RelationLabel::kFatherInLaw : RelationLabel::kMotherInLaw;
    case KinTerm::kChildInLaw:
      if (male) return RelationLabel::kSonInLaw;
      return std::nullopt;
  }
  return std::nullopt;
}

GenderedTerm Unsurface(RelationLabel label) {
  for (KinTerm t : kAllKinTerms) {
    for (Gender g : {Gender::kFemale, Gender::kMale}) {
      if (SurfaceLabel(t, g) == label) return {t, g};
    }
  }
  throw std::logic_error("label without a term");
}

CompositionTable CompositionTable::Parse(std::string_view text,
                                         std::string_view origin) {
  CompositionTable table;
  std::array<int, kNumKinTerms * kNumPrimitiveSteps> seen_at{};
  int line_no = 0;
  for (std::string_view raw : SplitLines(text)) {
    ++line_no;
    std::string_view line = raw.substr(0, raw.find('#'));
    line = Trim(line);
    if (line.empty()) continue;
    const std::string where =
        std::string(origin) + ":" + std::to_string(line_no) + ": ";

    std::vector<std::string_view> fields;
    size_t start = 0;
    for (;;) {
      size_t comma = line.find(',', start);
      fields.push_back(Trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 3) {
      throw AssetError(where + "expected term,step,result");
    }
    auto term = ParseKinTerm(fields[0]);
    if (!term) throw AssetError(where + "unknown term '" + std::string(fields[0]) + "'");
    auto step = ParseStep(fields[1]);
    if (!step) throw AssetError(where + "unknown step '" + std::string(fields[1]) + "'");
    std::optional<KinTerm> result;
    if (fields[2] != "undefined") {
      result = ParseKinTerm(fields[2]);
      if (!result) {
        throw AssetError(where + "unknown result '" + std::string(fields[2]) + "'");
      }
    }
    const size_t idx = Index(*term, *step);
    if (seen_at[idx] != 0) {
      throw AssetError(where + "duplicate cell (first defined on line " +
                       std::to_string(seen_at[idx]) + ")");
    }
    seen_at[idx] = line_no;
    table.cells_[idx] = result;
  }
  for (KinTerm t : kAllKinTerms) {
    for (PrimitiveStep s : kAllSteps) {
      if (seen_at[Index(t, s)] == 0) {
        throw AssetError(std::string(origin) + ": missing cell " +
                         std::string(KinTermName(t)) + "," +
                         std::string(StepName(s)));
      }
    }
  }
  return table;
}

const CompositionTable& CompositionTable::Default() {
  static const auto* table = new CompositionTable(
      Parse(EmbeddedAsset(kCompositionTableAsset), kCompositionTableAsset));
  return *table;
}

std::string CompositionTable::Serialize() const {
  std::ostringstream out;
  for (KinTerm t : kAllKinTerms) {
    for (PrimitiveStep s : kAllSteps) {
      auto r = Compose(t, s);
      out << KinTermName(t) << ',' << StepName(s) << ','
          << (r ? KinTermName(*r) : std::string_view("undefined")) << '\n';
    }
  }
  return out.str();
}

std::optional<KinTerm> ComposePath(std::span<const PrimitiveStep> steps,
                                   const CompositionTable& table) {
  if (steps.empty()) {
    throw std::invalid_argument("ComposePath: empty step list");
  }
  std::optional<KinTerm> term = Lift(steps.front());
  for (PrimitiveStep s : steps.subspan(1)) {
    term = table.Compose(*term, s);
    if (!term) break;
  }
  return term;
}

std::vector<std::vector<StepEdge>> BuildStepAdjacency(const FamilyGraph& g) {
  if (!g.siblings_derived()) {
    throw std::invalid_argument("BuildStepAdjacency: sibling edges not derived");
  }
  std::vector<std::vector<StepEdge>> adj(g.size());
  for (auto [p, c] : g.parent_edges()) {
    adj[p].push_back({c, PrimitiveStep::kParentOf});
    adj[c].push_back({p, PrimitiveStep::kChildOf});
  }
  for (auto [a, b] : g.spouse_edges()) {
    adj[a].push_back({b, PrimitiveStep::kSpouseOf});
    adj[b].push_back({a, PrimitiveStep::kSpouseOf});
  }
  for (auto [a, b] : g.sibling_edges()) {
    adj[a].push_back({b, PrimitiveStep::kSiblingOf});
    adj[b].push_back({a, PrimitiveStep::kSiblingOf});
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end(), [](const StepEdge& x, const StepEdge& y) {
      return std::pair(x.to, x.step) < std::pair(y.to, y.step);
    });
  }
  return adj;
}

uint64_t SequenceKey(std::span<const PrimitiveStep> steps) {
  if (steps.size() > 31) throw std::invalid_argument("SequenceKey: too long");
  // Leading sentinel digit keeps sequences of different lengths apart.
  uint64_t key = 1;
  for (PrimitiveStep s : steps) key = key * 4 + static_cast<uint64_t>(s);
  return key;
}

namespace {

struct SequenceCollector {
  const std::vector<std::vector<StepEdge>>& adj;
  const CompositionTable& table;
  int k;
  std::vector<char> on_path;
  std::vector<PrimitiveStep> steps;
  std::unordered_map<uint64_t, KinTerm> found;

  void Walk(NodeId at, KinTerm term) {
    if (static_cast<int>(steps.size()) == k) {
      found.emplace(SequenceKey(steps), term);
      return;
    }
    for (const StepEdge& e : adj[at]) {
      if (on_path[e.to]) continue;
      std::optional<KinTerm> next =
          steps.empty() ? Lift(e.step) : table.Compose(term, e.step);
      if (!next) continue;  // undefined never recovers
      on_path[e.to] = 1;
      steps.push_back(e.step);
      Walk(e.to, *next);
      steps.pop_back();
      on_path[e.to] = 0;
    }
  }
};

}  // namespace

std::vector<DefinedSequence> UniqueSequences(int k, const GenConfig& config,
                                             const CompositionTable& table) {
  if (k < kMinCountLength || k > kMaxCountLength) {
    throw ConfigError("path length k must be in [" +
                      std::to_string(kMinCountLength) + ", " +
                      std::to_string(kMaxCountLength) + "], got " +
                      std::to_string(k));
  }
  config.Validate();
  const FamilyGraph family =
      GenerateRegularFamily(config.max_levels, config.max_children);
  const auto adj = BuildStepAdjacency(family);

  SequenceCollector collector{adj, table, k, std::vector<char>(family.size()),
                              {}, {}};
  for (NodeId start = 0; start < static_cast<NodeId>(family.size()); ++start) {
    collector.on_path[start] = 1;
    collector.Walk(start, KinTerm::kParent);
    collector.on_path[start] = 0;
  }

  std::map<uint64_t, KinTerm> sorted(collector.found.begin(), collector.found.end());
  std::vector<DefinedSequence> out;
  out.reserve(sorted.size());
  for (const auto& [packed, term] : sorted) {
    uint64_t key = packed;
    DefinedSequence seq{std::vector<PrimitiveStep>(static_cast<size_t>(k)), term};
    for (int i = k - 1; i >= 0; --i, key /= 4) {
      seq.steps[i] = static_cast<PrimitiveStep>(key % 4);
    }
    out.push_back(std::move(seq));
  }
  return out;
}

SequenceCount CountUniqueSequences(int k, const GenConfig& config,
                                   const CompositionTable& table) {
  SequenceCount count;
  for (const auto& [steps, term] : UniqueSequences(k, config, table)) {
    int genders = 0;
    for (Gender g : {Gender::kFemale, Gender::kMale}) {
      if (SurfaceLabel(term, g)) ++genders;
    }
    if (genders == 0) continue;
    ++count.ungendered;
    count.gendered += genders;
  }
  return count;
}

}  // namespace kinforge
