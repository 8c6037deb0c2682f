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

#ifndef KINFORGE_STORY_RENDERER_H_
#define KINFORGE_STORY_RENDERER_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kinforge/kinship_graph.h"
#include "kinforge/path_sampler.h"
#include "kinforge/random.h"
#include "kinforge/relation_algebra.h"

namespace kinforge {

// A sentence template with <A>, <B> (entities) and <V> (attribute value)
// slots, pre-split into literal and slot pieces.
class SentenceTemplate {
 public:
  enum class Slot : uint8_t { kNone, kA, kB, kV };
  struct Piece {
    Slot slot = Slot::kNone;
    std::string literal;  // set when slot == kNone
  };

  // Throws AssetError (without location; callers prefix it) on unknown or
  // adjacent slots.
  static SentenceTemplate Parse(std::string_view text);

  const std::string& text() const { return text_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  int SlotCount(Slot s) const;

  std::string Fill(std::string_view a, std::string_view b,
                   std::string_view v) const;

 private:
  std::string text_;
  std::vector<Piece> pieces_;
};

// Relation templates, 2-3 per label, loaded from "label: template" lines.
class TemplateDictionary {
 public:
  static TemplateDictionary Parse(std::string_view text,
                                  std::string_view origin);
  static const TemplateDictionary& Default();

  const std::vector<SentenceTemplate>& templates(RelationLabel label) const {
    return entries_[static_cast<size_t>(label)];
  }

 private:
  std::array<std::vector<SentenceTemplate>, kNumRelationLabels> entries_;
};

inline constexpr std::array<std::string_view, 8> kAttributeKeys = {
    "works_at", "alumni_of", "school", "location_born",
    "preferred_social_media", "hobby", "sport", "political_view"};

// Distractor attributes. File format: a "[key]" header per attribute
// followed by "template: ..." and "value: ..." lines.
class AttributeDictionary {
 public:
  struct Entry {
    std::string key;
    std::vector<std::string> values;
    std::vector<SentenceTemplate> templates;
  };

  static AttributeDictionary Parse(std::string_view text,
                                   std::string_view origin);
  static const AttributeDictionary& Default();

  // Entries in kAttributeKeys order.
  const std::vector<Entry>& entries() const { return entries_; }
  const Entry& entry(std::string_view key) const;

 private:
  std::vector<Entry> entries_;
};

// Word-level tokenization used for sentences: whitespace split, with
// trailing punctuation and the possessive "'s" as separate tokens.
// Detokenize inverts it for template-rendered text.
std::vector<std::string> Tokenize(std::string_view text);
std::string Detokenize(const std::vector<std::string>& tokens);

enum class SentenceKind : uint8_t { kRelation, kDistractor };

struct Sentence {
  SentenceKind kind = SentenceKind::kRelation;
  std::string text;
  std::vector<std::string> tokens;
  std::vector<int> entity_slots;  // token positions of entity mentions
};

// How one sentence was produced, for provenance.
struct SentenceOrigin {
  SentenceKind kind = SentenceKind::kRelation;
  int template_index = 0;
  // Relation: index of the path edge. Distractor: index of the path node.
  int path_index = 0;
  std::string attribute;  // distractors only
  std::string value;      // distractors only
};

struct Provenance {
  uint64_t graph_seed = 0;
  uint64_t render_seed = 0;
  std::vector<NodeId> path_nodes;
  std::vector<PrimitiveStep> path_steps;
  std::vector<SentenceOrigin> origins;  // parallel to StoryExample::story
  std::map<std::string, std::string> entity_map;  // name -> placeholder
};

struct StoryExample {
  std::string id;
  std::vector<Sentence> story;
  std::vector<std::string> entities;  // path order
  std::pair<std::string, std::string> query;
  RelationLabel target = RelationLabel::kFather;
  KinTerm target_term = KinTerm::kParent;
  int k = 0;
  int d = 0;
  Provenance provenance;

  std::string Text() const;
};

inline constexpr int kDefaultDistractors = 8;
inline constexpr int kDefaultEntityPool = 10;

// "<A> is the <label> of <B>." style sentence for the edge (a, b, step);
// the label is surfaced from a's gender.
Sentence RenderRelationSentence(const PersonNode& a, const PersonNode& b,
                                PrimitiveStep step,
                                const TemplateDictionary& td, Rng& rng,
                                int* template_index = nullptr);

// d sentences over d distinct attribute keys. Values already present in
// node.attributes are reused; new ones are recorded there.
std::vector<Sentence> RenderDistractors(PersonNode& node,
                                        const AttributeDictionary& ad, int d,
                                        Rng& rng,
                                        std::vector<SentenceOrigin>* origins =
                                            nullptr);

// Relation sentences in path order, (k + 1) * d distractors over the
// distinct path nodes, interleaved uniformly at random.
StoryExample RenderStory(const RelationPath& path, const FamilyGraph& graph,
                         const TemplateDictionary& td,
                         const AttributeDictionary& ad, int d, Rng& rng);

// Replaces every entity name with "@entityN", N drawn from a random
// permutation of [0, pool_size). Throws ConfigError if the story has more
// entities than the pool.
StoryExample Anonymize(const StoryExample& example, Rng& rng,
                       int pool_size = kDefaultEntityPool);

std::string PlaceholderName(int index);

}  // namespace kinforge

#endif  // KINFORGE_STORY_RENDERER_H_
