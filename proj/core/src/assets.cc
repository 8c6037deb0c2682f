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

#include "kinforge/assets.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "kinforge/errors.h"

namespace kinforge {
namespace internal {
const std::map<std::string, std::string>& EmbeddedAssets();
}  // namespace internal

const std::string& EmbeddedAsset(std::string_view name) {
  const auto& assets = internal::EmbeddedAssets();
  auto it = assets.find(std::string(name));
  if (it == assets.end()) {
    throw AssetError("unknown embedded asset: " + std::string(name));
  }
  return it->second;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AssetError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string_view Trim(std::string_view s) {
  const char* ws = " \t";
  size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> ParseNameList(std::string_view text,
                                       std::string_view origin) {
  std::vector<std::string> names;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  for (std::string_view raw : SplitLines(text)) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::string where =
        std::string(origin) + ":" + std::to_string(line_no) + ": ";
    for (char c : line) {
      if (!((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'))) {
        throw AssetError(where + "name must be alphabetic: '" +
                         std::string(line) + "'");
      }
    }
    if (!seen.insert(std::string(line)).second) {
      throw AssetError(where + "duplicate name '" + std::string(line) + "'");
    }
    names.emplace_back(line);
  }
  if (names.empty()) throw AssetError(std::string(origin) + ": no names");
  return names;
}

const std::vector<std::string>& FemaleNames() {
  static const auto* names = new std::vector<std::string>(
      ParseNameList(EmbeddedAsset(kFemaleNamesAsset), kFemaleNamesAsset));
  return *names;
}

const std::vector<std::string>& MaleNames() {
  static const auto* names = new std::vector<std::string>(
      ParseNameList(EmbeddedAsset(kMaleNamesAsset), kMaleNamesAsset));
  return *names;
}

}  // namespace kinforge
