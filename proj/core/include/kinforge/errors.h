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

#ifndef KINFORGE_ERRORS_H_
#define KINFORGE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace kinforge {

// Invalid generator or CLI configuration. Tools map this to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A text asset (composition table, templates, attributes, names) is
// malformed. Messages carry "<origin>:<line>:" prefixes.
class AssetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Story text that does not invert against the template dictionaries.
class StoryParseError : public std::runtime_error {
 public:
  StoryParseError(const std::string& what, int sentence_index)
      : std::runtime_error(what), sentence_index_(sentence_index) {}
  int sentence_index() const { return sentence_index_; }

 private:
  int sentence_index_;
};

// The oracle could not derive an answer. Never expected on generated data.
class UnsolvableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kinforge

#endif  // KINFORGE_ERRORS_H_
