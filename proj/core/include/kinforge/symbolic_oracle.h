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

#ifndef KINFORGE_SYMBOLIC_ORACLE_H_
#define KINFORGE_SYMBOLIC_ORACLE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kinforge/relation_algebra.h"
#include "kinforge/story_renderer.h"

namespace kinforge {

struct RelationFact {
  std::string subject;  // holds `label` towards `object`
  std::string object;
  RelationLabel label;
  int sentence_index;
};

struct AttributeFact {
  std::string entity;
  std::string key;
  std::string value;
  int sentence_index;
};

struct ParsedStory {
  std::vector<RelationFact> relations;
  std::vector<AttributeFact> attributes;
  // Genders supplied by the caller for entities the text never genders.
  std::map<std::string, Gender> known_genders;
};

// Inverts the template dictionaries by exact matching. Each template is
// compiled once into literal/slot pieces; entity slots match a maximal run
// of [A-Za-z0-9@_], value slots match one entry of the value pool.
class StoryParser {
 public:
  StoryParser(const TemplateDictionary& td, const AttributeDictionary& ad);

  // The parser over the shipped dictionaries.
  static const StoryParser& Default();

  // Throws StoryParseError naming the sentence when a sentence matches no
  // template or more than one.
  ParsedStory Parse(const std::vector<std::string>& sentences) const;
  ParsedStory Parse(const StoryExample& example) const;

 private:
  struct Compiled {
    const SentenceTemplate* tmpl;
    std::optional<RelationLabel> label;  // relation templates
    const AttributeDictionary::Entry* attribute = nullptr;
  };

  const AttributeDictionary* ad_;
  std::vector<Compiled> compiled_;
};

// Folds the recovered edges from query.first to query.second and surfaces
// the result by the first entity's gender. Throws UnsolvableError when the
// edges do not connect the query, the fold is undefined, or the first
// entity's gender is never stated.
RelationLabel Solve(const ParsedStory& story,
                    const std::pair<std::string, std::string>& query,
                    const CompositionTable& table = CompositionTable::Default());

// Parse + Solve with the shipped dictionaries.
RelationLabel Solve(const StoryExample& example);

// The same example with every distractor sentence removed.
StoryExample WithoutDistractors(const StoryExample& example);

}  // namespace kinforge

#endif  // KINFORGE_SYMBOLIC_ORACLE_H_
