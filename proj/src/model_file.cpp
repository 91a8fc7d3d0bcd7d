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

#include "snac/model_file.hpp"

#include <fstream>
#include <sstream>

#include "snac/error.hpp"

namespace snac {

KinematicModel model_from_section(const KeyValueDocument& doc,
                                  std::string_view section) {
  auto require = [&](std::string_view key) -> const KeyValueEntry& {
    const KeyValueEntry* e = doc.find(section, key);
    if (e == nullptr) {
      throw ConfigError("model: missing key '" + std::string(key) + "'" +
                        (section.empty() ? std::string()
                                         : " in [" + std::string(section) + "]"));
    }
    return *e;
  };

  const std::string name = require("name").value;
  const long long dof = parse_integer(require("dof"));
  if (dof < 1) throw ConfigError("model: dof must be at least 1");

  std::vector<DHRow> rows;
  for (long long i = 1; i <= dof; ++i) {
    const KeyValueEntry& e = require("row" + std::to_string(i));
    const std::vector<double> v = parse_doubles(e);
    if (v.size() != 4) {
      throw ConfigError("line " + std::to_string(e.line) + ": " + e.key +
                        " needs 4 values (a alpha d theta_offset)");
    }
    rows.push_back({v[0], v[1], v[2], v[3]});
  }
  for (const KeyValueEntry* e : doc.section(section)) {
    if (e->key.rfind("row", 0) == 0) {
      const std::string idx = e->key.substr(3);
      if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos ||
          std::stoll(idx) < 1 || std::stoll(idx) > dof) {
        throw ConfigError("line " + std::to_string(e->line) + ": unexpected '" +
                          e->key + "' for dof = " + std::to_string(dof));
      }
    }
  }
  return KinematicModel(name, std::move(rows),
                        parse_doubles(require("velocity_limits")));
}

KinematicModel parse_model_text(std::string_view text) {
  const KeyValueDocument doc = KeyValueDocument::parse(text);
  if (doc.empty()) throw ConfigError("model file is empty");
  return model_from_section(doc, "");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError(path, "read failed");
  return ss.str();
}

KinematicModel load_model_file(const std::string& path) {
  return parse_model_text(read_text_file(path));
}

std::string format_model_text(const KinematicModel& model) {
  std::string out;
  out += "name = " + model.name() + "\n";
  out += "dof = " + std::to_string(model.dof()) + "\n";
  for (int i = 0; i < model.dof(); ++i) {
    const DHRow& r = model.rows()[i];
    out += "row" + std::to_string(i + 1) + " = " +
           format_doubles({r.a, r.alpha, r.d, r.theta_offset}) + "\n";
  }
  out += "velocity_limits = " + format_doubles(model.joint_velocity_limits()) +
         "\n";
  return out;
}

}  // namespace snac
