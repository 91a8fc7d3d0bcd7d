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

#include "snac/keyvalue.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include <fmt/format.h>

#include "snac/error.hpp"

namespace snac {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string where(const KeyValueEntry& e) {
  std::string s = "line " + std::to_string(e.line) + ": ";
  if (!e.section.empty()) s += "[" + e.section + "] ";
  return s + e.key;
}

bool to_double(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

KeyValueDocument KeyValueDocument::parse(std::string_view text) {
  KeyValueDocument doc;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ConfigError("line " + std::to_string(line_no) +
                          ": malformed section header");
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (std::find(doc.sections_.begin(), doc.sections_.end(), section) !=
          doc.sections_.end()) {
        throw ConfigError("line " + std::to_string(line_no) +
                          ": duplicate section [" + section + "]");
      }
      doc.sections_.push_back(section);
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    KeyValueEntry entry{section, std::string(trim(line.substr(0, eq))),
                        std::string(trim(line.substr(eq + 1))), line_no};
    if (entry.key.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    }
    if (doc.find(entry.section, entry.key) != nullptr) {
      throw ConfigError(where(entry) + ": duplicate key");
    }
    doc.entries_.push_back(std::move(entry));
  }
  return doc;
}

bool KeyValueDocument::has_section(std::string_view s) const {
  return std::find(sections_.begin(), sections_.end(), s) != sections_.end();
}

const KeyValueEntry* KeyValueDocument::find(std::string_view s,
                                            std::string_view key) const {
  for (const KeyValueEntry& e : entries_) {
    if (e.section == s && e.key == key) return &e;
  }
  return nullptr;
}

std::vector<const KeyValueEntry*> KeyValueDocument::section(
    std::string_view s) const {
  std::vector<const KeyValueEntry*> out;
  for (const KeyValueEntry& e : entries_) {
    if (e.section == s) out.push_back(&e);
  }
  return out;
}

double parse_double(const KeyValueEntry& entry) {
  double v = 0.0;
  if (!to_double(entry.value, v) || !std::isfinite(v)) {
    throw ConfigError(where(entry) + ": expected a finite number, got '" +
                      entry.value + "'");
  }
  return v;
}

long long parse_integer(const KeyValueEntry& entry) {
  long long v = 0;
  const std::string& s = entry.value;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError(where(entry) + ": expected an integer, got '" + s + "'");
  }
  return v;
}

bool parse_bool(const KeyValueEntry& entry) {
  const std::string& v = entry.value;
  if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "off" || v == "no" || v == "0") return false;
  throw ConfigError(where(entry) + ": expected true/false, got '" + v + "'");
}

std::vector<std::string> parse_words(const KeyValueEntry& entry) {
  std::vector<std::string> out;
  std::string current;
  for (char c : entry.value) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::vector<double> parse_doubles(const KeyValueEntry& entry) {
  std::vector<double> out;
  for (const std::string& w : parse_words(entry)) {
    double v = 0.0;
    if (!to_double(w, v) || !std::isfinite(v)) {
      throw ConfigError(where(entry) + ": '" + w + "' is not a finite number");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError(where(entry) + ": expected numbers");
  return out;
}

std::string format_double(double value) { return fmt::format("{}", value); }

std::string format_doubles(const std::vector<double>& values) {
  return fmt::format("{}", fmt::join(values, ", "));
}

}  // namespace snac
