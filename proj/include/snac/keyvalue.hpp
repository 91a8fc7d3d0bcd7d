// Copyright 2026 The snac-kinematics Authors
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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace snac {

// Line-oriented "key = value" text with optional "[section]" headers.
// '#' starts a comment. Keys are unique within a section.
struct KeyValueEntry {
  std::string section;
  std::string key;
  std::string value;
  int line = 0;
};

class KeyValueDocument {
 public:
  // Throws ConfigError with the offending line number on malformed input.
  static KeyValueDocument parse(std::string_view text);

  const std::vector<KeyValueEntry>& entries() const { return entries_; }
  bool has_section(std::string_view section) const;
  const KeyValueEntry* find(std::string_view section,
                            std::string_view key) const;
  std::vector<const KeyValueEntry*> section(std::string_view section) const;
  bool empty() const { return entries_.empty() && sections_.empty(); }

 private:
  std::vector<KeyValueEntry> entries_;
  std::vector<std::string> sections_;
};

// Value conversions. Errors name the section, key and line.
double parse_double(const KeyValueEntry& entry);
long long parse_integer(const KeyValueEntry& entry);
bool parse_bool(const KeyValueEntry& entry);
// Numbers separated by commas and/or whitespace.
std::vector<double> parse_doubles(const KeyValueEntry& entry);
std::vector<std::string> parse_words(const KeyValueEntry& entry);

// Shortest text that reads back to exactly the same double.
std::string format_double(double value);
std::string format_doubles(const std::vector<double>& values);

}  // namespace snac
