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

#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kinforge/assets.h"
#include "kinforge/errors.h"
#include "kinforge/path_sampler.h"

namespace kinforge {
namespace {

using P = PrimitiveStep;

PersonNode Person(NodeId id, Gender g, const std::string& name) {
  PersonNode p;
  p.id = id;
  p.gender = g;
  p.name = name;
  return p;
}

TEST(Tokenize, SplitsPunctuationAndPossessive) {
  const std::vector<std::string> want{"Ann", "is", "Bob", "'s", "wife", "."};
  EXPECT_EQ(Tokenize("Ann is Bob's wife."), want);
  EXPECT_EQ(Detokenize(want), "Ann is Bob's wife.");
  const std::vector<std::string> comma{"Ann", ",", "a", "nurse", ",", "left", "."};
  EXPECT_EQ(Tokenize("Ann, a nurse, left."), comma);
  EXPECT_EQ(Detokenize(comma), "Ann, a nurse, left.");
  EXPECT_TRUE(Tokenize("").empty());
}

TEST(SentenceTemplate, ParseAndFill) {
  const SentenceTemplate t = SentenceTemplate::Parse("<B>'s wife is <A>.");
  EXPECT_EQ(t.SlotCount(SentenceTemplate::Slot::kA), 1);
  EXPECT_EQ(t.SlotCount(SentenceTemplate::Slot::kB), 1);
  EXPECT_EQ(t.SlotCount(SentenceTemplate::Slot::kV), 0);
  EXPECT_EQ(t.Fill("Ann", "Bob", ""), "Bob's wife is Ann.");
  EXPECT_THROW(SentenceTemplate::Parse("<A><B> are related."), AssetError);
  EXPECT_THROW(SentenceTemplate::Parse("<C> is here."), AssetError);
}

TEST(RenderRelationSentence, WifeExample) {
  const PersonNode ann = Person(0, Gender::kFemale, "Ann");
  const PersonNode bob = Person(1, Gender::kMale, "Bob");
  const std::set<std::string> allowed{"Ann is the wife of Bob.", "Ann is Bob's wife.",
                                      "Bob's wife is Ann."};
  std::set<std::string> seen;
  for (uint64_t seed = 0; seed < 64; ++seed) {
    Rng rng(seed);
    int choice = -1;
    const Sentence s = RenderRelationSentence(ann, bob, P::kSpouseOf,
                                              TemplateDictionary::Default(), rng,
                                              &choice);
    EXPECT_TRUE(allowed.contains(s.text)) << s.text;
    EXPECT_EQ(s.kind, SentenceKind::kRelation);
    EXPECT_EQ(Detokenize(s.tokens), s.text);
    ASSERT_EQ(s.entity_slots.size(), 2u);
    if (choice == 0) {
      EXPECT_EQ(s.text, "Ann is the wife of Bob.");
    }
    seen.insert(s.text);
  }
  EXPECT_EQ(seen, allowed);
}

TEST(RenderRelationSentence, LabelFollowsTheSubject) {
  const PersonNode dad = Person(0, Gender::kMale, "Carl");
  const PersonNode kid = Person(1, Gender::kFemale, "Dana");
  Rng rng(1);
  const Sentence s =
      RenderRelationSentence(dad, kid, P::kParentOf, TemplateDictionary::Default(), rng);
  EXPECT_NE(s.text.find("father"), std::string::npos) << s.text;
  const Sentence back =
      RenderRelationSentence(kid, dad, P::kChildOf, TemplateDictionary::Default(), rng);
  EXPECT_NE(back.text.find("daughter"), std::string::npos) << back.text;
}

TEST(RenderDistractors, DistinctKeysAndStableValues) {
  PersonNode p = Person(0, Gender::kFemale, "Ann");
  Rng rng(3);
  std::vector<SentenceOrigin> origins;
  const auto all = RenderDistractors(p, AttributeDictionary::Default(), 8, rng, &origins);
  ASSERT_EQ(all.size(), 8u);
  std::set<std::string> keys;
  for (const auto& o : origins) {
    keys.insert(o.attribute);
    EXPECT_EQ(p.attributes.at(o.attribute), o.value);
  }
  EXPECT_EQ(keys.size(), 8u);
  for (const auto& s : all) {
    EXPECT_EQ(s.kind, SentenceKind::kDistractor);
    EXPECT_EQ(s.tokens.at(s.entity_slots.at(0)), "Ann") << s.text;
  }
  // a second batch reuses the values already assigned
  const auto before = p.attributes;
  origins.clear();
  RenderDistractors(p, AttributeDictionary::Default(), 4, rng, &origins);
  for (const auto& o : origins) EXPECT_EQ(before.at(o.attribute), o.value);

  EXPECT_TRUE(RenderDistractors(p, AttributeDictionary::Default(), 0, rng).empty());
  EXPECT_THROW(RenderDistractors(p, AttributeDictionary::Default(), 9, rng), ConfigError);
}

RelationPath SomePath(const SaturatedGraph& sg, int k, uint64_t seed) {
  const PathSample s = SamplePaths(sg, k, 1, seed);
  if (s.paths.empty()) throw std::runtime_error("no path");
  return s.paths[0];
}

SaturatedGraph Family(uint64_t seed) {
  GenConfig c;
  c.max_levels = 3;
  c.min_children = 2;
  c.max_children = 3;
  c.seed = seed;
  return Saturate(GenerateFamilyGraph(c));
}

TEST(RenderStory, SentenceCountLaw) {
  const SaturatedGraph sg = Family(1);
  for (auto [k, d, want] : {std::tuple{3, 8, 35}, {6, 8, 62}, {3, 0, 3}, {4, 2, 14}}) {
    Rng rng(k * 10 + d);
    const StoryExample ex = RenderStory(SomePath(sg, k, 2), sg.base(),
                                       TemplateDictionary::Default(),
                                       AttributeDictionary::Default(), d, rng);
    EXPECT_EQ(static_cast<int>(ex.story.size()), want) << "k=" << k << " d=" << d;
    EXPECT_EQ(ex.provenance.origins.size(), ex.story.size());
  }
}

TEST(RenderStory, RelationsInPathOrder) {
  const SaturatedGraph sg = Family(2);
  const RelationPath path = SomePath(sg, 5, 7);
  Rng rng(9);
  const StoryExample ex = RenderStory(path, sg.base(), TemplateDictionary::Default(),
                                      AttributeDictionary::Default(), 8, rng);
  EXPECT_EQ(ex.k, 5);
  EXPECT_EQ(ex.d, 8);
  EXPECT_EQ(ex.target, path.target_label);
  EXPECT_EQ(ex.entities.size(), 6u);
  EXPECT_EQ(ex.query, std::pair(ex.entities.front(), ex.entities.back()));
  int next = 0;
  std::map<int, int> per_node;
  for (size_t i = 0; i < ex.story.size(); ++i) {
    const SentenceOrigin& o = ex.provenance.origins[i];
    EXPECT_EQ(o.kind, ex.story[i].kind);
    if (o.kind == SentenceKind::kRelation) {
      EXPECT_EQ(o.path_index, next++);
      const auto& toks = ex.story[i].tokens;
      const std::string& a = ex.entities[o.path_index];
      const std::string& b = ex.entities[o.path_index + 1];
      EXPECT_NE(std::find(toks.begin(), toks.end(), a), toks.end());
      EXPECT_NE(std::find(toks.begin(), toks.end(), b), toks.end());
    } else {
      ++per_node[o.path_index];
    }
  }
  EXPECT_EQ(next, 5);
  for (int i = 0; i <= 5; ++i) EXPECT_EQ(per_node[i], 8);
  // relations are not always first
  EXPECT_NE(ex.story[0].kind == SentenceKind::kRelation &&
                ex.story[1].kind == SentenceKind::kRelation &&
                ex.story[2].kind == SentenceKind::kRelation,
            true);
}

TEST(RenderStory, DeterministicUnderSeed) {
  const SaturatedGraph sg = Family(3);
  const RelationPath path = SomePath(sg, 4, 1);
  auto render = [&](uint64_t seed) {
    Rng rng(seed);
    return RenderStory(path, sg.base(), TemplateDictionary::Default(),
                       AttributeDictionary::Default(), 8, rng)
        .Text();
  };
  EXPECT_EQ(render(5), render(5));
  EXPECT_NE(render(5), render(6));
}

TEST(Anonymize, ConsistentBijection) {
  const SaturatedGraph sg = Family(4);
  const RelationPath path = SomePath(sg, 6, 3);
  Rng rng(11);
  const StoryExample named = RenderStory(path, sg.base(), TemplateDictionary::Default(),
                                         AttributeDictionary::Default(), 8, rng);
  std::set<std::vector<std::string>> orders;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Rng arng(seed);
    const StoryExample anon = Anonymize(named, arng);
    const auto& map = anon.provenance.entity_map;
    ASSERT_EQ(map.size(), named.entities.size());
    std::set<std::string> placeholders;
    for (const auto& [name, ph] : map) {
      EXPECT_EQ(ph.rfind("@entity", 0), 0u);
      placeholders.insert(ph);
    }
    EXPECT_EQ(placeholders.size(), map.size());
    ASSERT_EQ(anon.story.size(), named.story.size());
    for (size_t i = 0; i < anon.story.size(); ++i) {
      std::string expect = named.story[i].text;
      for (const auto& [name, ph] : map) {
        for (size_t at = expect.find(name); at != std::string::npos;
             at = expect.find(name, at + ph.size())) {
          expect.replace(at, name.size(), ph);
        }
      }
      EXPECT_EQ(anon.story[i].text, expect);
      for (const auto& [name, ph] : map) {
        EXPECT_EQ(anon.story[i].text.find(name), std::string::npos);
      }
    }
    EXPECT_EQ(anon.query.first, map.at(named.query.first));
    EXPECT_EQ(anon.query.second, map.at(named.query.second));
    orders.insert(anon.entities);
  }
  EXPECT_GT(orders.size(), 10u);
}

TEST(Anonymize, PoolTooSmall) {
  const SaturatedGraph sg = Family(5);
  Rng rng(1);
  const StoryExample named = RenderStory(SomePath(sg, 6, 1), sg.base(),
                                         TemplateDictionary::Default(),
                                         AttributeDictionary::Default(), 0, rng);
  EXPECT_THROW(Anonymize(named, rng, 6), ConfigError);
  EXPECT_NO_THROW(Anonymize(named, rng, 7));
  EXPECT_EQ(PlaceholderName(3), "@entity3");
}

std::set<std::string> Words(std::string_view text) {
  std::set<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!cur.empty()) {
      out.insert(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.insert(cur);
  return out;
}

TEST(Assets, NamesNeverCollideWithTemplateWords) {
  std::set<std::string> vocab = Words(EmbeddedAsset(kRelationTemplatesAsset));
  for (const auto& w : Words(EmbeddedAsset(kAttributesAsset))) vocab.insert(w);
  std::set<std::string> all;
  for (const auto* pool : {&FemaleNames(), &MaleNames()}) {
    for (const std::string& name : *pool) {
      std::string lower;
      for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      EXPECT_FALSE(vocab.contains(lower)) << name;
      EXPECT_TRUE(all.insert(name).second) << name << " is in both pools";
    }
  }
  EXPECT_GE(FemaleNames().size(), 200u);
  EXPECT_GE(MaleNames().size(), 200u);
}

TEST(Assets, DictionariesCoverEveryLabelAndKey) {
  const TemplateDictionary& td = TemplateDictionary::Default();
  for (RelationLabel l : AllRelationLabels()) {
    EXPECT_GE(td.templates(l).size(), 2u) << LabelName(l);
  }
  const AttributeDictionary& ad = AttributeDictionary::Default();
  ASSERT_EQ(ad.entries().size(), kAttributeKeys.size());
  for (size_t i = 0; i < kAttributeKeys.size(); ++i) {
    EXPECT_EQ(ad.entries()[i].key, kAttributeKeys[i]);
    EXPECT_GE(ad.entries()[i].templates.size(), 2u);
    EXPECT_GE(ad.entries()[i].values.size(), 5u);
  }
  EXPECT_THROW(ad.entry("favourite_color"), std::exception);
}

std::string AssetErrorOf(auto parse) {
  try {
    parse();
  } catch (const AssetError& e) {
    return e.what();
  }
  return "";
}

TEST(Assets, MalformedDictionaries) {
  const std::string one_template = "father: <A> is the father of <B>.\n";
  EXPECT_NE(AssetErrorOf([&] { TemplateDictionary::Parse(one_template, "r.txt"); }), "");
  EXPECT_NE(AssetErrorOf([&] {
              TemplateDictionary::Parse("# c\nuncle: <A> is the uncle of <B>.\n", "r.txt");
            }).find("r.txt:2:"),
            std::string::npos);
  EXPECT_NE(AssetErrorOf([&] {
              TemplateDictionary::Parse("father: <A> is the father.\n", "r.txt");
            }).find("r.txt:1:"),
            std::string::npos);
  EXPECT_NE(AssetErrorOf([&] {
              AttributeDictionary::Parse("[works_at]\ntemplate: <A> works.\n", "a.txt");
            }),
            "");
  EXPECT_NE(AssetErrorOf([&] { AttributeDictionary::Parse("value: x\n", "a.txt"); })
                .find("a.txt:1:"),
            std::string::npos);
  EXPECT_THROW(ParseNameList("Ann\nAnn\n", "n.txt"), AssetError);
  EXPECT_THROW(ParseNameList("Mary Ann\n", "n.txt"), AssetError);
  EXPECT_EQ(ParseNameList("# names\nAnn\n\nBea\n", "n.txt"),
            (std::vector<std::string>{"Ann", "Bea"}));
}

}  // namespace
}  // namespace kinforge
