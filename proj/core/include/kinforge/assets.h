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

#ifndef KINFORGE_ASSETS_H_
#define KINFORGE_ASSETS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace kinforge {

// Names of the text assets baked into the library at build time.
inline constexpr std::string_view kCompositionTableAsset =
    "composition_table.txt";
inline constexpr std::string_view kRelationTemplatesAsset =
    "relation_templates.txt";
inline constexpr std::string_view kAttributesAsset = "attributes.txt";
inline constexpr std::string_view kFemaleNamesAsset = "names_female.txt";
inline constexpr std::string_view kMaleNamesAsset = "names_male.txt";

// Contents of an embedded asset. Throws AssetError for unknown names.
const std::string& EmbeddedAsset(std::string_view name);

// Reads a whole file; throws AssetError if it cannot be opened.
std::string ReadTextFile(const std::filesystem::path& path);

// One name per line; '#' comments and blank lines ignored. Names must be a
// single alphabetic word and unique within the list.
std::vector<std::string> ParseNameList(std::string_view text,
                                       std::string_view origin);

const std::vector<std::string>& FemaleNames();
const std::vector<std::string>& MaleNames();

// Splits text into lines, stripping a trailing '\r'.
std::vector<std::string_view> SplitLines(std::string_view text);
std::string_view Trim(std::string_view s);

}  // namespace kinforge

#endif  // KINFORGE_ASSETS_H_
