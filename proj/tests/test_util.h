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

#ifndef KINFORGE_TESTS_TEST_UTIL_H_
#define KINFORGE_TESTS_TEST_UTIL_H_

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kinforge/kinship_graph.h"
#include "kinforge/relation_algebra.h"

namespace kinforge::testing {

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("kinforge-" + tag + "-" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void Spit(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
}

// Relations of u towards v read straight off parent and spouse edges, with
// no reference to the composition table.
inline std::vector<KinTerm> GenealogyTerms(const FamilyGraph& g, NodeId u,
                                           NodeId v) {
  auto is_parent = [&](NodeId a, NodeId b) {
    for (NodeId p : g.parents(b)) {
      if (p == a) return true;
    }
    return false;
  };
  auto is_grandparent = [&](NodeId a, NodeId b) {
    for (NodeId p : g.parents(b)) {
      if (is_parent(a, p)) return true;
    }
    return false;
  };
  auto shares_parent = [&](NodeId a, NodeId b) {
    for (NodeId p : g.parents(a)) {
      if (is_parent(p, b)) return true;
    }
    return false;
  };
  std::vector<KinTerm> out;
  if (u == v) return out;
  if (is_parent(u, v)) out.push_back(KinTerm::kParent);
  if (is_parent(v, u)) out.push_back(KinTerm::kChild);
  if (g.spouse(u) == v) out.push_back(KinTerm::kSpouse);
  if (shares_parent(u, v)) out.push_back(KinTerm::kSibling);
  if (is_grandparent(u, v)) out.push_back(KinTerm::kGrandparent);
  if (is_grandparent(v, u)) out.push_back(KinTerm::kGrandchild);
  if (auto sv = g.spouse(v); sv && is_parent(u, *sv)) {
    out.push_back(KinTerm::kParentInLaw);
  }
  if (auto su = g.spouse(u); su && is_parent(v, *su)) {
    out.push_back(KinTerm::kChildInLaw);
  }
  return out;
}

}  // namespace kinforge::testing

#endif  // KINFORGE_TESTS_TEST_UTIL_H_
