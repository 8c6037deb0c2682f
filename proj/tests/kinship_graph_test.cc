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

#include "kinforge/kinship_graph.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

#include "kinforge/assets.h"
#include "kinforge/errors.h"

namespace kinforge {
namespace {

GenConfig Config(int levels, int cmin, int cmax, uint64_t seed) {
  GenConfig c;
  c.max_levels = levels;
  c.min_children = cmin;
  c.max_children = cmax;
  c.seed = seed;
  return c;
}

// Checks the structural laws every generated family obeys.
void ExpectWellFormed(const FamilyGraph& g, const GenConfig& config) {
  ASSERT_TRUE(g.siblings_derived());
  const auto& females = FemaleNames();
  const auto& males = MaleNames();
  std::set<std::string> names;
  for (const PersonNode& n : g.nodes()) {
    const auto& pool = n.gender == Gender::kFemale ? females : males;
    EXPECT_NE(std::find(pool.begin(), pool.end(), n.name), pool.end())
        << n.name << " is not in its gender's pool";
    EXPECT_TRUE(names.insert(n.name).second) << "repeated name " << n.name;
    EXPECT_GE(n.level, 0);
    EXPECT_LE(n.level, config.max_levels);
    EXPECT_TRUE(n.attributes.empty());

    const auto& ps = g.parents(n.id);
    if (n.level == 0) {
      EXPECT_TRUE(ps.empty());
    } else if (!ps.empty()) {
      ASSERT_EQ(ps.size(), 2u);
      EXPECT_NE(g.node(ps[0]).gender, g.node(ps[1]).gender);
      EXPECT_EQ(g.spouse(ps[0]), ps[1]);
      for (NodeId p : ps) EXPECT_EQ(g.node(p).level + 1, n.level);
    } else {
      // married in: no parents, partner has them
      auto sp = g.spouse(n.id);
      ASSERT_TRUE(sp.has_value());
      EXPECT_FALSE(g.parents(*sp).empty());
    }
    if (auto sp = g.spouse(n.id)) {
      EXPECT_NE(g.node(*sp).gender, n.gender);
      EXPECT_EQ(g.node(*sp).level, n.level);
      EXPECT_EQ(g.spouse(*sp), n.id);
      const auto& kids = g.children(n.id);
      EXPECT_GE(static_cast<int>(kids.size()), config.min_children);
      EXPECT_LE(static_cast<int>(kids.size()), config.max_children);
      EXPECT_EQ(kids, g.children(*sp));
    } else {
      EXPECT_TRUE(g.children(n.id).empty());
    }
  }
  // siblings: exactly the pairs sharing a parent
  for (const PersonNode& a : g.nodes()) {
    for (const PersonNode& b : g.nodes()) {
      if (a.id >= b.id) continue;
      bool share = false;
      for (NodeId p : g.parents(a.id)) {
        const auto& kids = g.children(p);
        share |= std::find(kids.begin(), kids.end(), b.id) != kids.end();
      }
      const bool listed = std::binary_search(
          g.sibling_edges().begin(), g.sibling_edges().end(),
          std::pair(a.id, b.id));
      EXPECT_EQ(share, listed) << a.id << "," << b.id;
    }
  }
  // one head, one partner per couple, one node per child
  EXPECT_EQ(g.size(), 1 + g.spouse_edges().size() + g.parent_edges().size() / 2);
}

TEST(GenerateFamilyGraph, SmallestFamily) {
  const FamilyGraph g = GenerateFamilyGraph(Config(1, 1, 1, 5));
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.spouse_edges().size(), 1u);
  EXPECT_EQ(g.parent_edges().size(), 2u);
  EXPECT_TRUE(g.sibling_edges().empty());
  EXPECT_EQ(g.node(2).level, 1);
  EXPECT_EQ(g.parents(2).size(), 2u);
}

TEST(GenerateFamilyGraph, FixedBranchingCounts) {
  const FamilyGraph two = GenerateFamilyGraph(Config(2, 2, 2, 11));
  EXPECT_EQ(two.size(), 10u);
  EXPECT_EQ(two.sibling_edges().size(), 3u);
  const FamilyGraph three = GenerateFamilyGraph(Config(3, 3, 3, 11));
  EXPECT_EQ(three.size(), 53u);
  EXPECT_EQ(three.max_level(), 3);
}

TEST(GenerateFamilyGraph, InvariantsOverManySeeds) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const GenConfig config = Config(1 + seed % 4, 1 + seed % 2, 3, seed);
    const FamilyGraph g = GenerateFamilyGraph(config);
    ExpectWellFormed(g, config);
    if (HasFatalFailure()) return;
  }
}

TEST(GenerateFamilyGraph, DeterministicUnderSeed) {
  const GenConfig config = Config(3, 1, 3, 1234);
  EXPECT_EQ(GenerateFamilyGraph(config).DebugDump(),
            GenerateFamilyGraph(config).DebugDump());
  GenConfig other = config;
  other.seed = 1235;
  EXPECT_NE(GenerateFamilyGraph(config).DebugDump(),
            GenerateFamilyGraph(other).DebugDump());
}

TEST(GenerateFamilyGraph, BothGendersOccur) {
  int female_heads = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    female_heads +=
        GenerateFamilyGraph(Config(1, 1, 1, seed)).node(0).gender == Gender::kFemale;
  }
  EXPECT_GT(female_heads, 25);
  EXPECT_LT(female_heads, 75);
}

TEST(GenerateFamilyGraph, RejectsBadConfig) {
  EXPECT_THROW(GenerateFamilyGraph(Config(0, 1, 1, 0)), ConfigError);
  EXPECT_THROW(GenerateFamilyGraph(Config(2, 0, 1, 0)), ConfigError);
  EXPECT_THROW(GenerateFamilyGraph(Config(2, 3, 2, 0)), ConfigError);
}

TEST(GenerateFamilyGraph, NamePoolExhaustion) {
  // 8 generations of 3 children need far more names than the pools hold
  EXPECT_THROW(GenerateFamilyGraph(Config(8, 3, 3, 0)), ConfigError);
}

TEST(GenerateRegularFamily, ShapeAndSiblings) {
  const FamilyGraph g = GenerateRegularFamily(3, 3);
  EXPECT_EQ(g.size(), 53u);
  EXPECT_TRUE(g.siblings_derived());
  // 13 sibling groups of 3
  EXPECT_EQ(g.sibling_edges().size(), 13u * 3u);
  EXPECT_EQ(GenerateRegularFamily(2, 2).size(), 10u);
}

TEST(DeriveSiblingEdges, Idempotent) {
  const FamilyGraph g = GenerateFamilyGraph(Config(3, 1, 3, 77));
  const FamilyGraph again = DeriveSiblingEdges(g);
  EXPECT_EQ(again.sibling_edges(), g.sibling_edges());
  EXPECT_EQ(DeriveSiblingEdges(again).sibling_edges(), g.sibling_edges());
}

TEST(DeriveSiblingEdges, HandBuiltGraph) {
  // 0,1 couple with children 2,3,4; 5 is married to 2
  std::vector<PersonNode> nodes(6);
  for (int i = 0; i < 6; ++i) nodes[i].id = i;
  nodes[1].gender = Gender::kMale;
  FamilyGraph g(nodes, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}},
                {{0, 1}, {2, 5}}, 0);
  EXPECT_FALSE(g.siblings_derived());
  g = DeriveSiblingEdges(std::move(g));
  const std::vector<std::pair<NodeId, NodeId>> want{{2, 3}, {2, 4}, {3, 4}};
  EXPECT_EQ(g.sibling_edges(), want);
  EXPECT_EQ(g.siblings(3), (std::vector<NodeId>{2, 4}));
  EXPECT_TRUE(g.siblings(5).empty());
}

TEST(FamilyGraph, DebugDumpFormat) {
  const FamilyGraph g = GenerateFamilyGraph(Config(1, 1, 1, 5));
  const std::string dump = g.DebugDump();
  const std::string n0 = g.node(0).name;
  const std::string n2 = g.node(2).name;
  EXPECT_EQ(dump.rfind("0," + std::string(GenderName(g.node(0).gender)) + ",0," + n0 + "\n", 0), 0u);
  EXPECT_NE(dump.find("0 parent-of 2\n"), std::string::npos);
  EXPECT_NE(dump.find("1 parent-of 2\n"), std::string::npos);
  EXPECT_NE(dump.find("0 spouse-of 1\n"), std::string::npos);
}

TEST(Gender, NamesRoundTrip) {
  for (Gender g : {Gender::kFemale, Gender::kMale}) {
    EXPECT_EQ(ParseGender(GenderName(g)), g);
    EXPECT_NE(Opposite(g), g);
  }
  EXPECT_FALSE(ParseGender("other").has_value());
}

}  // namespace
}  // namespace kinforge
