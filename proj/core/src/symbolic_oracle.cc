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

#include "kinforge/symbolic_oracle.h"

#include <deque>
#include <map>

#include "kinforge/errors.h"

namespace kinforge {
namespace {

bool IsEntityChar(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '@' || c == '_';
}

struct Bindings {
  std::string_view a, b, v;
};

bool MatchFrom(const std::vector<SentenceTemplate::Piece>& pieces, size_t i,
               std::string_view text, size_t pos,
               const std::vector<std::string>* values, Bindings& out) {
  using Slot = SentenceTemplate::Slot;
  if (i == pieces.size()) return pos == text.size();
  const auto& piece = pieces[i];
  switch (piece.slot) {
    case Slot::kNone:
      if (text.substr(pos, piece.literal.size()) != piece.literal) return false;
      return MatchFrom(pieces, i + 1, text, pos + piece.literal.size(), values, out);
    case Slot::kA:
    case Slot::kB: {
      size_t end = pos;
      while (end < text.size() && IsEntityChar(text[end])) ++end;
      if (end == pos) return false;
      (piece.slot == Slot::kA ? out.a : out.b) = text.substr(pos, end - pos);
      return MatchFrom(pieces, i + 1, text, end, values, out);
    }
    case Slot::kV:
      if (values == nullptr) return false;
      for (const std::string& value : *values) {
        if (text.substr(pos, value.size()) != value) continue;
        out.v = text.substr(pos, value.size());
        if (MatchFrom(pieces, i + 1, text, pos + value.size(), values, out)) {
          return true;
        }
      }
      return false;
  }
  return false;
}

}  // namespace

StoryParser::StoryParser(const TemplateDictionary& td,
                         const AttributeDictionary& ad)
    : ad_(&ad) {
  for (RelationLabel l : AllRelationLabels()) {
    for (const auto& t : td.templates(l)) compiled_.push_back({&t, l, nullptr});
  }
  for (const auto& entry : ad.entries()) {
    for (const auto& t : entry.templates) {
      compiled_.push_back({&t, std::nullopt, &entry});
    }
  }
}

const StoryParser& StoryParser::Default() {
  static const auto* parser = new StoryParser(TemplateDictionary::Default(),
                                              AttributeDictionary::Default());
  return *parser;
}

ParsedStory StoryParser::Parse(const std::vector<std::string>& sentences) const {
  ParsedStory parsed;
  for (size_t idx = 0; idx < sentences.size(); ++idx) {
    const std::string& text = sentences[idx];
    const int index = static_cast<int>(idx);
    const Compiled* hit = nullptr;
    Bindings found;
    for (const Compiled& c : compiled_) {
      Bindings b;
      const auto* values = c.attribute ? &c.attribute->values : nullptr;
      if (!MatchFrom(c.tmpl->pieces(), 0, text, 0, values, b)) continue;
      if (hit != nullptr) {
        throw StoryParseError("sentence " + std::to_string(index) +
                                  " matches more than one template: '" + text + "'",
                              index);
      }
      hit = &c;
      found = b;
    }
    if (hit == nullptr) {
      throw StoryParseError("sentence " + std::to_string(index) +
                                " matches no template: '" + text + "'",
                            index);
    }
    if (hit->label) {
      parsed.relations.push_back(
          {std::string(found.a), std::string(found.b), *hit->label, index});
    } else {
      parsed.attributes.push_back({std::string(found.a), hit->attribute->key,
                                   std::string(found.v), index});
    }
  }
  return parsed;
}

ParsedStory StoryParser::Parse(const StoryExample& example) const {
  std::vector<std::string> sentences;
  sentences.reserve(example.story.size());
  for (const auto& s : example.story) sentences.push_back(s.text);
  return Parse(sentences);
}

RelationLabel Solve(const ParsedStory& story,
                    const std::pair<std::string, std::string>& query,
                    const CompositionTable& table) {
  const auto& [first, last] = query;
  if (first == last) throw UnsolvableError("query entities are identical");

  struct Edge {
    std::string to;
    PrimitiveStep step;
  };
  std::map<std::string, std::vector<Edge>> adj;
  std::map<std::string, Gender> gender = story.known_genders;
  for (const RelationFact& f : story.relations) {
    const GenderedTerm gt = Unsurface(f.label);
    auto step = AsStep(gt.term);
    if (!step) {
      throw UnsolvableError("sentence " + std::to_string(f.sentence_index) +
                            " states a non-primitive relation '" +
                            std::string(LabelName(f.label)) + "'");
    }
    adj[f.subject].push_back({f.object, *step});
    adj[f.object].push_back({f.subject, Invert(*step)});
    auto [it, fresh] = gender.emplace(f.subject, gt.gender);
    if (!fresh && it->second != gt.gender) {
      throw UnsolvableError("conflicting genders for " + f.subject);
    }
  }

  // Breadth-first search from the first entity; the story edges form a
  // path, so the shortest route is the path itself.
  std::map<std::string, std::pair<std::string, PrimitiveStep>> came_from;
  std::deque<std::string> queue{first};
  came_from.emplace(first, std::pair(std::string(), PrimitiveStep::kParentOf));
  while (!queue.empty() && !came_from.contains(last)) {
    std::string at = queue.front();
    queue.pop_front();
    for (const Edge& e : adj[at]) {
      if (came_from.contains(e.to)) continue;
      came_from.emplace(e.to, std::pair(at, e.step));
      queue.push_back(e.to);
    }
  }
  if (!came_from.contains(last)) {
    throw UnsolvableError("no relation chain connects " + first + " and " + last);
  }
  std::vector<PrimitiveStep> steps;
  for (std::string at = last; at != first;) {
    const auto& [prev, step] = came_from.at(at);
    steps.push_back(step);
    at = prev;
  }
  std::reverse(steps.begin(), steps.end());

  auto term = ComposePath(steps, table);
  if (!term) throw UnsolvableError("relation chain composes to no kinship term");
  auto g = gender.find(first);
  if (g == gender.end()) {
    throw UnsolvableError("gender of " + first + " is never stated");
  }
  auto label = SurfaceLabel(*term, g->second);
  if (!label) throw UnsolvableError("relation has no label in the label set");
  return *label;
}

RelationLabel Solve(const StoryExample& example) {
  return Solve(StoryParser::Default().Parse(example), example.query);
}

StoryExample WithoutDistractors(const StoryExample& example) {
  StoryExample out = example;
  out.story.clear();
  out.provenance.origins.clear();
  for (size_t i = 0; i < example.story.size(); ++i) {
    if (example.story[i].kind == SentenceKind::kDistractor) continue;
    out.story.push_back(example.story[i]);
    if (i < example.provenance.origins.size()) {
      out.provenance.origins.push_back(example.provenance.origins[i]);
    }
  }
  return out;
}

}  // namespace kinforge
