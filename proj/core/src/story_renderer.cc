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

#include "kinforge/story_renderer.h"

#include <algorithm>
#include <set>

#include "kinforge/assets.h"
#include "kinforge/errors.h"

namespace kinforge {
namespace {

bool IsEntityChar(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '@' || c == '_';
}

bool IsTrailingPunct(char c) {
  return c == '.' || c == ',' || c == '!' || c == '?' || c == ';' || c == ':';
}

std::string Where(std::string_view origin, int line) {
  return std::string(origin) + ":" + std::to_string(line) + ": ";
}

// Rejects templates whose rendered text would not survive a
// Tokenize/Detokenize round trip or could not be inverted by slot matching.
void CheckRenderable(const SentenceTemplate& t, const std::string& where) {
  const auto& pieces = t.pieces();
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].slot == SentenceTemplate::Slot::kNone) continue;
    if (i + 1 < pieces.size() && pieces[i + 1].slot == SentenceTemplate::Slot::kNone &&
        IsEntityChar(pieces[i + 1].literal.front()) &&
        pieces[i].slot != SentenceTemplate::Slot::kV) {
      throw AssetError(where + "entity slot must be followed by a separator: '" +
                       t.text() + "'");
    }
  }
  const std::string sample = t.Fill("Xa", "Yb", "some value");
  if (Detokenize(Tokenize(sample)) != sample) {
    throw AssetError(where + "template does not tokenize cleanly: '" +
                     t.text() + "'");
  }
}

}  // namespace

SentenceTemplate SentenceTemplate::Parse(std::string_view text) {
  SentenceTemplate t;
  t.text_ = std::string(text);
  size_t pos = 0;
  std::string literal;
  while (pos < text.size()) {
    if (text[pos] == '<') {
      size_t close = text.find('>', pos);
      if (close == std::string_view::npos) {
        throw AssetError("unterminated slot in '" + t.text_ + "'");
      }
      std::string_view name = text.substr(pos + 1, close - pos - 1);
      Slot slot;
      if (name == "A") {
        slot = Slot::kA;
      } else if (name == "B") {
        slot = Slot::kB;
      } else if (name == "V") {
        slot = Slot::kV;
      } else {
        throw AssetError("unknown slot <" + std::string(name) + "> in '" +
                         t.text_ + "'");
      }
      if (!literal.empty()) {
        t.pieces_.push_back({Slot::kNone, std::move(literal)});
        literal.clear();
      } else if (!t.pieces_.empty()) {
        throw AssetError("adjacent slots in '" + t.text_ + "'");
      }
      t.pieces_.push_back({slot, {}});
      pos = close + 1;
    } else {
      literal.push_back(text[pos++]);
    }
  }
  if (!literal.empty()) t.pieces_.push_back({Slot::kNone, std::move(literal)});
  if (text.find("  ") != std::string_view::npos) {
    throw AssetError("double space in '" + t.text_ + "'");
  }
  return t;
}

int SentenceTemplate::SlotCount(Slot s) const {
  return static_cast<int>(std::count_if(
      pieces_.begin(), pieces_.end(), [s](const Piece& p) { return p.slot == s; }));
}

std::string SentenceTemplate::Fill(std::string_view a, std::string_view b,
                                   std::string_view v) const {
  std::string out;
  for (const Piece& p : pieces_) {
    switch (p.slot) {
      case Slot::kNone: out += p.literal; break;
      case Slot::kA: out += a; break;
      case Slot::kB: out += b; break;
      case Slot::kV: out += v; break;
    }
  }
  return out;
}

TemplateDictionary TemplateDictionary::Parse(std::string_view text,
                                             std::string_view origin) {
  TemplateDictionary td;
  std::set<std::string> seen;
  int line_no = 0;
  for (std::string_view raw : SplitLines(text)) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = Where(origin, line_no);
    size_t colon = line.find(": ");
    if (colon == std::string_view::npos) {
      throw AssetError(where + "expected '<label>: <template>'");
    }
    auto label = ParseLabel(Trim(line.substr(0, colon)));
    if (!label) {
      throw AssetError(where + "unknown relation label '" +
                       std::string(Trim(line.substr(0, colon))) + "'");
    }
    std::string_view body = Trim(line.substr(colon + 2));
    SentenceTemplate t;
    try {
      t = SentenceTemplate::Parse(body);
    } catch (const AssetError& e) {
      throw AssetError(where + e.what());
    }
    using Slot = SentenceTemplate::Slot;
    if (t.SlotCount(Slot::kA) != 1 || t.SlotCount(Slot::kB) != 1 ||
        t.SlotCount(Slot::kV) != 0) {
      throw AssetError(where + "relation template needs <A> and <B> exactly once");
    }
    if (!seen.insert(t.text()).second) {
      throw AssetError(where + "duplicate template '" + t.text() + "'");
    }
    CheckRenderable(t, where);
    td.entries_[static_cast<size_t>(*label)].push_back(std::move(t));
  }
  for (RelationLabel l : AllRelationLabels()) {
    if (td.templates(l).size() < 2) {
      throw AssetError(std::string(origin) + ": label '" +
                       std::string(LabelName(l)) +
                       "' needs at least 2 templates");
    }
  }
  return td;
}

const TemplateDictionary& TemplateDictionary::Default() {
  static const auto* td = new TemplateDictionary(
      Parse(EmbeddedAsset(kRelationTemplatesAsset), kRelationTemplatesAsset));
  return *td;
}

AttributeDictionary AttributeDictionary::Parse(std::string_view text,
                                               std::string_view origin) {
  std::vector<Entry> parsed;
  std::set<std::string> seen_templates;
  int line_no = 0;
  for (std::string_view raw : SplitLines(text)) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = Where(origin, line_no);
    if (line.front() == '[') {
      if (line.back() != ']') throw AssetError(where + "unterminated section");
      std::string key(line.substr(1, line.size() - 2));
      if (std::find(kAttributeKeys.begin(), kAttributeKeys.end(), key) ==
          kAttributeKeys.end()) {
        throw AssetError(where + "unknown attribute key '" + key + "'");
      }
      for (const auto& e : parsed) {
        if (e.key == key) throw AssetError(where + "duplicate section '" + key + "'");
      }
      parsed.push_back({key, {}, {}});
      continue;
    }
    if (parsed.empty()) throw AssetError(where + "entry before any [key] section");
    size_t colon = line.find(": ");
    if (colon == std::string_view::npos) {
      throw AssetError(where + "expected 'template: ...' or 'value: ...'");
    }
    std::string_view kind = line.substr(0, colon);
    std::string_view body = Trim(line.substr(colon + 2));
    Entry& entry = parsed.back();
    if (kind == "value") {
      if (body.empty() || body.find("  ") != std::string_view::npos ||
          body.find('<') != std::string_view::npos) {
        throw AssetError(where + "malformed value '" + std::string(body) + "'");
      }
      if (std::find(entry.values.begin(), entry.values.end(), body) !=
          entry.values.end()) {
        throw AssetError(where + "duplicate value '" + std::string(body) + "'");
      }
      entry.values.emplace_back(body);
    } else if (kind == "template") {
      SentenceTemplate t;
      try {
        t = SentenceTemplate::Parse(body);
      } catch (const AssetError& e) {
        throw AssetError(where + e.what());
      }
      using Slot = SentenceTemplate::Slot;
      if (t.SlotCount(Slot::kA) != 1 || t.SlotCount(Slot::kV) != 1 ||
          t.SlotCount(Slot::kB) != 0) {
        throw AssetError(where + "attribute template needs <A> and <V> exactly once");
      }
      if (!seen_templates.insert(t.text()).second) {
        throw AssetError(where + "duplicate template '" + t.text() + "'");
      }
      CheckRenderable(t, where);
      entry.templates.push_back(std::move(t));
    } else {
      throw AssetError(where + "unknown entry kind '" + std::string(kind) + "'");
    }
  }

  AttributeDictionary ad;
  for (std::string_view key : kAttributeKeys) {
    auto it = std::find_if(parsed.begin(), parsed.end(),
                           [&](const Entry& e) { return e.key == key; });
    if (it == parsed.end()) {
      throw AssetError(std::string(origin) + ": missing attribute '" +
                       std::string(key) + "'");
    }
    if (it->templates.size() < 2 || it->values.size() < 5) {
      throw AssetError(std::string(origin) + ": attribute '" + it->key +
                       "' needs >= 2 templates and >= 5 values");
    }
    ad.entries_.push_back(std::move(*it));
  }
  return ad;
}

const AttributeDictionary& AttributeDictionary::Default() {
  static const auto* ad = new AttributeDictionary(
      Parse(EmbeddedAsset(kAttributesAsset), kAttributesAsset));
  return *ad;
}

const AttributeDictionary::Entry& AttributeDictionary::entry(
    std::string_view key) const {
  for (const auto& e : entries_) {
    if (e.key == key) return e;
  }
  throw std::out_of_range("unknown attribute key: " + std::string(key));
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view word = text.substr(pos, end - pos);
    pos = end;

    std::vector<std::string> tail;
    while (word.size() > 1 && IsTrailingPunct(word.back())) {
      tail.emplace_back(1, word.back());
      word.remove_suffix(1);
    }
    std::reverse(tail.begin(), tail.end());
    if (word.size() > 2 && word.ends_with("'s")) {
      tokens.emplace_back(word.substr(0, word.size() - 2));
      tokens.emplace_back("'s");
    } else {
      tokens.emplace_back(word);
    }
    for (auto& t : tail) tokens.push_back(std::move(t));
  }
  return tokens;
}

std::string Detokenize(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    const bool attach = t == "'s" || (t.size() == 1 && IsTrailingPunct(t[0]));
    if (!out.empty() && !attach) out.push_back(' ');
    out += t;
  }
  return out;
}

std::string StoryExample::Text() const {
  std::string out;
  for (const Sentence& s : story) {
    if (!out.empty()) out.push_back(' ');
    out += s.text;
  }
  return out;
}

namespace {

Sentence MakeSentence(SentenceKind kind, std::string text,
                      std::initializer_list<std::string_view> entities) {
  Sentence s;
  s.kind = kind;
  s.tokens = Tokenize(text);
  s.text = std::move(text);
  for (size_t i = 0; i < s.tokens.size(); ++i) {
    for (std::string_view e : entities) {
      if (s.tokens[i] == e) {
        s.entity_slots.push_back(static_cast<int>(i));
        break;
      }
    }
  }
  return s;
}

}  // namespace

Sentence RenderRelationSentence(const PersonNode& a, const PersonNode& b,
                                PrimitiveStep step,
                                const TemplateDictionary& td, Rng& rng,
                                int* template_index) {
  auto label = SurfaceLabel(Lift(step), a.gender);
  if (!label) throw std::logic_error("primitive step without a surface label");
  const auto& options = td.templates(*label);
  if (options.empty()) {
    throw AssetError("no template for label '" + std::string(LabelName(*label)) + "'");
  }
  const size_t choice = rng.Below(options.size());
  if (template_index) *template_index = static_cast<int>(choice);
  return MakeSentence(SentenceKind::kRelation,
                      options[choice].Fill(a.name, b.name, {}),
                      {a.name, b.name});
}

std::vector<Sentence> RenderDistractors(PersonNode& node,
                                        const AttributeDictionary& ad, int d,
                                        Rng& rng,
                                        std::vector<SentenceOrigin>* origins) {
  const auto& entries = ad.entries();
  if (d < 0 || d > static_cast<int>(entries.size())) {
    throw ConfigError("distractors per node must be in [0, " +
                      std::to_string(entries.size()) + "], got " +
                      std::to_string(d));
  }
  std::vector<size_t> keys(entries.size());
  for (size_t i = 0; i < keys.size(); ++i) keys[i] = i;
  rng.PartialShuffle(keys, static_cast<size_t>(d));

  std::vector<Sentence> out;
  for (int i = 0; i < d; ++i) {
    const auto& entry = entries[keys[i]];
    auto [it, fresh] = node.attributes.try_emplace(entry.key);
    if (fresh) it->second = entry.values[rng.Below(entry.values.size())];
    const size_t choice = rng.Below(entry.templates.size());
    out.push_back(MakeSentence(SentenceKind::kDistractor,
                               entry.templates[choice].Fill(node.name, {}, it->second),
                               {node.name}));
    if (origins) {
      origins->push_back({SentenceKind::kDistractor, static_cast<int>(choice), 0,
                          entry.key, it->second});
    }
  }
  return out;
}

StoryExample RenderStory(const RelationPath& path, const FamilyGraph& graph,
                         const TemplateDictionary& td,
                         const AttributeDictionary& ad, int d, Rng& rng) {
  const int k = path.k();
  if (k < 1 || path.nodes.size() != static_cast<size_t>(k) + 1) {
    throw std::invalid_argument("RenderStory: malformed path");
  }
  StoryExample ex;
  ex.k = k;
  ex.d = d;
  ex.target = path.target_label;
  ex.target_term = path.target_term;
  ex.provenance.graph_seed = graph.seed();
  ex.provenance.path_nodes = path.nodes;
  ex.provenance.path_steps = path.steps;

  std::vector<PersonNode> people;
  people.reserve(path.nodes.size());
  for (NodeId id : path.nodes) {
    people.push_back(graph.node(id));
    people.back().attributes.clear();
    ex.entities.push_back(people.back().name);
  }
  ex.query = {ex.entities.front(), ex.entities.back()};

  std::vector<Sentence> relations;
  std::vector<SentenceOrigin> relation_origins;
  for (int i = 0; i < k; ++i) {
    int choice = 0;
    relations.push_back(RenderRelationSentence(people[i], people[i + 1],
                                               path.steps[i], td, rng, &choice));
    relation_origins.push_back({SentenceKind::kRelation, choice, i, {}, {}});
  }

  // One batch of d distractors per distinct node; paths are simple so every
  // node is distinct.
  std::vector<Sentence> distractors;
  std::vector<SentenceOrigin> distractor_origins;
  for (size_t i = 0; i < people.size(); ++i) {
    const size_t before = distractor_origins.size();
    for (Sentence& s : RenderDistractors(people[i], ad, d, rng, &distractor_origins)) {
      distractors.push_back(std::move(s));
    }
    for (size_t j = before; j < distractor_origins.size(); ++j) {
      distractor_origins[j].path_index = static_cast<int>(i);
    }
  }

  // Random order for distractors, then a uniform choice of which k of the
  // total slots hold the (ordered) relation sentences.
  std::vector<size_t> perm(distractors.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  rng.Shuffle(perm);
  const size_t total = relations.size() + distractors.size();
  std::vector<size_t> slots(total);
  for (size_t i = 0; i < total; ++i) slots[i] = i;
  rng.PartialShuffle(slots, relations.size());
  std::vector<char> is_relation(total, 0);
  for (size_t i = 0; i < relations.size(); ++i) is_relation[slots[i]] = 1;

  size_t next_relation = 0;
  size_t next_distractor = 0;
  for (size_t pos = 0; pos < total; ++pos) {
    if (is_relation[pos]) {
      ex.story.push_back(std::move(relations[next_relation]));
      ex.provenance.origins.push_back(relation_origins[next_relation]);
      ++next_relation;
    } else {
      const size_t j = perm[next_distractor++];
      ex.story.push_back(std::move(distractors[j]));
      ex.provenance.origins.push_back(distractor_origins[j]);
    }
  }
  return ex;
}

std::string PlaceholderName(int index) {
  return "@entity" + std::to_string(index);
}

StoryExample Anonymize(const StoryExample& example, Rng& rng, int pool_size) {
  if (static_cast<int>(example.entities.size()) > pool_size) {
    throw ConfigError("story has " + std::to_string(example.entities.size()) +
                      " entities but the placeholder pool holds " +
                      std::to_string(pool_size));
  }
  std::vector<int> perm(static_cast<size_t>(pool_size));
  for (int i = 0; i < pool_size; ++i) perm[i] = i;
  rng.Shuffle(perm);

  StoryExample out = example;
  std::map<std::string, std::string> mapping;
  for (size_t i = 0; i < example.entities.size(); ++i) {
    mapping[example.entities[i]] = PlaceholderName(perm[i]);
  }
  auto swap_name = [&](const std::string& name) {
    auto it = mapping.find(name);
    return it == mapping.end() ? name : it->second;
  };
  for (Sentence& s : out.story) {
    for (int slot : s.entity_slots) s.tokens[slot] = swap_name(s.tokens[slot]);
    s.text = Detokenize(s.tokens);
  }
  for (auto& e : out.entities) e = swap_name(e);
  out.query = {swap_name(out.query.first), swap_name(out.query.second)};
  out.provenance.entity_map = std::move(mapping);
  return out;
}

}  // namespace kinforge
