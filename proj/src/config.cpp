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

#include "snac/config.hpp"

#include <filesystem>
#include <set>

#include "snac/error.hpp"
#include "snac/keyvalue.hpp"
#include "snac/model_file.hpp"

namespace snac {
namespace {

// Tracks which entries were read so unknown keys can be reported.
class Reader {
 public:
  explicit Reader(const KeyValueDocument& doc) : doc_(doc) {}

  const KeyValueEntry* get(std::string_view section, std::string_view key) {
    const KeyValueEntry* e = doc_.find(section, key);
    if (e != nullptr) used_.insert(e);
    return e;
  }

  void mark_section(std::string_view section) {
    for (const KeyValueEntry* e : doc_.section(section)) used_.insert(e);
  }

  void reject_unknown() const {
    for (const KeyValueEntry& e : doc_.entries()) {
      if (!used_.count(&e)) {
        throw ConfigError("line " + std::to_string(e.line) + ": unknown key '" +
                          e.key + "'" +
                          (e.section.empty() ? std::string(" outside any section")
                                             : " in [" + e.section + "]"));
      }
    }
  }

  const KeyValueDocument& doc() const { return doc_; }

 private:
  const KeyValueDocument& doc_;
  std::set<const KeyValueEntry*> used_;
};

std::string at(const KeyValueEntry& e) {
  return "line " + std::to_string(e.line) + ": [" + e.section + "] " + e.key;
}

Eigen::Vector3d parse_vec3(const KeyValueEntry& e) {
  const std::vector<double> v = parse_doubles(e);
  if (v.size() != 3) throw ConfigError(at(e) + ": expected 3 values");
  return {v[0], v[1], v[2]};
}

JointVector parse_joint_vector(const KeyValueEntry& e, int dof) {
  const std::vector<double> v = parse_doubles(e);
  if (static_cast<int>(v.size()) != dof) {
    throw ConfigError(at(e) + ": expected " + std::to_string(dof) + " values");
  }
  return Eigen::Map<const JointVector>(v.data(), dof);
}

Eigen::MatrixXd parse_square(Reader& r, std::string_view section,
                             const std::string& name, int n,
                             const Eigen::MatrixXd& fallback) {
  const KeyValueEntry* full = r.get(section, name);
  const KeyValueEntry* diag = r.get(section, name + "_diag");
  if (full && diag) {
    throw ConfigError(at(*diag) + ": give either " + name + " or " + name +
                      "_diag, not both");
  }
  if (full) {
    const std::vector<double> v = parse_doubles(*full);
    if (static_cast<int>(v.size()) != n * n) {
      throw ConfigError(at(*full) + ": expected " + std::to_string(n * n) +
                        " values (row-major)");
    }
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = v[static_cast<std::size_t>(i * n + j)];
    return m;
  }
  if (diag) {
    const std::vector<double> v = parse_doubles(*diag);
    if (static_cast<int>(v.size()) != n) {
      throw ConfigError(at(*diag) + ": expected " + std::to_string(n) + " values");
    }
    return Eigen::Map<const Eigen::VectorXd>(v.data(), n).asDiagonal();
  }
  if (fallback.rows() == n) return fallback;
  return Eigen::MatrixXd::Identity(n, n);
}

template <typename Fn>
auto semantic(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

KinematicModel read_model(Reader& r, const KinematicModel& fallback,
                          const std::string& base_dir) {
  if (!r.doc().has_section("model")) return fallback;
  if (const KeyValueEntry* p = r.get("model", "preset")) {
    if (r.doc().section("model").size() != 1) {
      throw ConfigError(at(*p) + ": a model preset takes no other keys");
    }
    if (p->value != "ur10") {
      throw ConfigError(at(*p) + ": unknown model preset '" + p->value + "'");
    }
    return KinematicModel::ur10();
  }
  if (const KeyValueEntry* f = r.get("model", "file")) {
    if (r.doc().section("model").size() != 1) {
      throw ConfigError(at(*f) + ": a model file takes no other keys");
    }
    std::filesystem::path path(f->value);
    if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
    return semantic(at(*f), [&] { return load_model_file(path.string()); });
  }
  r.mark_section("model");
  return semantic("[model]", [&] { return model_from_section(r.doc(), "model"); });
}

GainConfig read_gains(Reader& r, const GainConfig& fallback, int dof) {
  const Eigen::MatrixXd q = parse_square(r, "gains", "Q", 3, fallback.q());
  const Eigen::MatrixXd rr = parse_square(r, "gains", "R", dof, fallback.r());
  return semantic("[gains]", [&] { return GainConfig(q, rr); });
}

void read_schedule(Reader& r, std::string_view section,
                   LearningRateSchedule& s) {
  if (auto* e = r.get(section, "alpha_initial")) s.alpha_initial = parse_double(*e);
  if (auto* e = r.get(section, "alpha_final")) s.alpha_final = parse_double(*e);
  if (auto* e = r.get(section, "n_switch")) s.n_switch = parse_double(*e);
  if (auto* e = r.get(section, "clock_period")) s.clock_period = parse_double(*e);
}

void read_dls(Reader& r, DlsSettings& d) {
  if (auto* e = r.get("dls", "damping")) d.damping = parse_double(*e);
  if (auto* e = r.get("dls", "gain")) d.gain = parse_double(*e);
}

TaskKind parse_task(const KeyValueEntry& e) {
  if (e.value == "regulation") return TaskKind::kRegulation;
  if (e.value == "tracking") return TaskKind::kTracking;
  throw ConfigError(at(e) + ": expected 'regulation' or 'tracking'");
}

ControllerKind parse_controller(const KeyValueEntry& e, const std::string& v) {
  if (v == "critic" || v == "snac") return ControllerKind::kCritic;
  if (v == "dls") return ControllerKind::kDls;
  if (v == "zero") return ControllerKind::kZero;
  throw ConfigError(at(e) + ": unknown controller '" + v + "'");
}

std::uint64_t parse_seed(const KeyValueEntry& e) {
  const long long v = parse_integer(e);
  if (v < 0) throw ConfigError(at(e) + ": seed must be non-negative");
  return static_cast<std::uint64_t>(v);
}

ReferenceTrajectory read_reference(Reader& r, const ReferenceTrajectory& base) {
  ReferenceTrajectory t = base;
  const KeyValueEntry* kind = r.get("reference", "kind");
  if (kind) {
    if (kind->value == "circle") {
      t.kind = ReferenceKind::kCircle;
    } else if (kind->value == "ellipse") {
      t.kind = ReferenceKind::kEllipse;
    } else if (kind->value == "fixed") {
      t.kind = ReferenceKind::kFixed;
    } else {
      throw ConfigError(at(*kind) + ": expected fixed, circle or ellipse");
    }
  }
  if (auto* e = r.get("reference", "center")) t.center = parse_vec3(*e);
  if (auto* e = r.get("reference", "radius")) {
    t.radius_u = t.radius_v = parse_double(*e);
  }
  if (auto* e = r.get("reference", "radii")) {
    const std::vector<double> v = parse_doubles(*e);
    if (v.size() != 2) throw ConfigError(at(*e) + ": expected 2 values");
    t.radius_u = v[0];
    t.radius_v = v[1];
  }
  if (auto* e = r.get("reference", "axis_u")) t.axis_u = parse_vec3(*e);
  if (auto* e = r.get("reference", "axis_v")) t.axis_v = parse_vec3(*e);
  if (auto* e = r.get("reference", "angular_speed")) t.angular_speed = parse_double(*e);
  if (auto* e = r.get("reference", "phase")) t.phase = parse_double(*e);
  semantic("[reference]", [&] {
    t.validate();
    return 0;
  });
  return t;
}

Scenario scenario_from(Reader& r, const std::string& base_dir) {
  const std::string_view S = "scenario";
  Scenario sc;
  if (auto* p = r.get(S, "preset")) {
    if (!is_scenario_preset(p->value)) {
      throw ConfigError(at(*p) + ": unknown scenario preset '" + p->value + "'");
    }
    sc = preset_scenario(p->value);
  } else {
    sc.theta0 = JointVector::Zero(sc.model.dof());
  }

  sc.model = read_model(r, sc.model, base_dir);
  const int dof = sc.model.dof();
  if (sc.theta0.size() != dof) sc.theta0 = JointVector::Zero(dof);

  if (auto* e = r.get(S, "name")) sc.name = e->value;
  if (auto* e = r.get(S, "task")) sc.task = parse_task(*e);
  if (auto* e = r.get(S, "controller")) sc.controller = parse_controller(*e, e->value);
  if (auto* e = r.get(S, "seed")) sc.seed = parse_seed(*e);
  if (auto* e = r.get(S, "dt")) sc.dt = parse_double(*e);
  if (auto* e = r.get(S, "horizon")) sc.horizon = parse_double(*e);
  if (auto* e = r.get(S, "clamp")) sc.clamp = parse_bool(*e);
  if (auto* e = r.get(S, "theta0")) sc.theta0 = parse_joint_vector(*e, dof);
  if (auto* e = r.get(S, "weight_init_range")) sc.weight_init_range = parse_double(*e);

  if (auto* e = r.get("target", "position")) {
    sc.reference = ReferenceTrajectory::fixed(parse_vec3(*e));
  }
  if (r.doc().has_section("reference")) {
    sc.reference = read_reference(r, sc.reference);
  }
  sc.gains = read_gains(r, sc.gains, dof);
  read_schedule(r, "critic", sc.schedule);
  read_dls(r, sc.dls);

  semantic("[scenario]", [&] {
    sc.validate();
    return 0;
  });
  return sc;
}

BenchConfig bench_from(Reader& r, const std::string& base_dir) {
  const std::string_view B = "benchmark";
  BenchConfig cfg = BenchConfig::defaults();
  if (auto* p = r.get(B, "preset")) {
    if (!is_bench_preset(p->value)) {
      throw ConfigError(at(*p) + ": unknown benchmark preset '" + p->value + "'");
    }
    cfg = preset_bench(p->value);
  }
  if (auto* e = r.get(B, "cases")) {
    const long long n = parse_integer(*e);
    if (n < 1) throw ConfigError(at(*e) + ": cases must be >= 1");
    cfg.cases = static_cast<std::size_t>(n);
  }
  if (auto* e = r.get(B, "seed")) cfg.seed = parse_seed(*e);
  if (auto* e = r.get(B, "batches")) {
    cfg.run_regulation = cfg.run_tracking = false;
    for (const std::string& w : parse_words(*e)) {
      if (w == "regulation") {
        cfg.run_regulation = true;
      } else if (w == "tracking") {
        cfg.run_tracking = true;
      } else {
        throw ConfigError(at(*e) + ": unknown batch '" + w + "'");
      }
    }
  }
  if (auto* e = r.get(B, "controllers")) {
    cfg.controllers.clear();
    for (const std::string& w : parse_words(*e)) {
      cfg.controllers.push_back(parse_controller(*e, w));
    }
  }
  if (auto* e = r.get(B, "match_effort")) cfg.match_effort = parse_bool(*e);
  if (auto* e = r.get(B, "pilot_cases")) {
    const long long n = parse_integer(*e);
    if (n < 0) throw ConfigError(at(*e) + ": pilot_cases must be >= 0");
    cfg.pilot_cases = static_cast<std::size_t>(n);
  }
  if (auto* e = r.get(B, "execution")) {
    if (e->value == "parallel") {
      cfg.execution = ExecutionPolicy::kParallel;
    } else if (e->value == "serial") {
      cfg.execution = ExecutionPolicy::kSerial;
    } else {
      throw ConfigError(at(*e) + ": expected 'parallel' or 'serial'");
    }
  }

  if (auto* e = r.get("workspace", "lo")) cfg.box.lo = parse_vec3(*e);
  if (auto* e = r.get("workspace", "hi")) cfg.box.hi = parse_vec3(*e);

  const KinematicModel model = read_model(r, cfg.regulation_template.model, base_dir);
  const int dof = model.dof();
  const GainConfig gains = read_gains(r, cfg.regulation_template.gains, dof);

  if (auto* e = r.get("sampling", "joint_lo")) cfg.joints.lo = parse_doubles(*e);
  if (auto* e = r.get("sampling", "joint_hi")) cfg.joints.hi = parse_doubles(*e);
  if (auto* e = r.get("sampling", "radius_min")) cfg.ellipse.radius_min = parse_double(*e);
  if (auto* e = r.get("sampling", "radius_max")) cfg.ellipse.radius_max = parse_double(*e);
  if (auto* e = r.get("sampling", "speed_min")) cfg.ellipse.speed_min = parse_double(*e);
  if (auto* e = r.get("sampling", "speed_max")) cfg.ellipse.speed_max = parse_double(*e);
  read_dls(r, cfg.dls);

  for (Scenario* t : {&cfg.regulation_template, &cfg.tracking_template}) {
    const std::string_view sec =
        t->task == TaskKind::kRegulation ? "regulation" : "tracking";
    t->model = model;
    t->gains = gains;
    if (t->theta0.size() != dof) t->theta0 = JointVector::Zero(dof);
    if (auto* e = r.get(sec, "dt")) t->dt = parse_double(*e);
    if (auto* e = r.get(sec, "horizon")) t->horizon = parse_double(*e);
    if (auto* e = r.get(sec, "clamp")) t->clamp = parse_bool(*e);
    if (auto* e = r.get(sec, "weight_init_range")) t->weight_init_range = parse_double(*e);
    read_schedule(r, sec, t->schedule);
    semantic("[" + std::string(sec) + "]", [&] {
      t->validate();
      return 0;
    });
  }
  semantic("[benchmark]", [&] {
    cfg.validate();
    return 0;
  });
  return cfg;
}

std::vector<double> to_vec(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

std::vector<double> to_vec(const Eigen::MatrixXd& m) {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

}  // namespace

ParsedConfig parse_config(std::string_view text, const std::string& base_dir) {
  const KeyValueDocument doc = KeyValueDocument::parse(text);
  if (doc.empty()) throw ConfigError("config is empty");
  Reader r(doc);
  ParsedConfig out;
  if (doc.has_section("benchmark")) {
    out = bench_from(r, base_dir);
  } else {
    out = scenario_from(r, base_dir);
  }
  r.reject_unknown();
  return out;
}

Scenario parse_scenario(std::string_view text, const std::string& base_dir) {
  ParsedConfig c = parse_config(text, base_dir);
  if (auto* s = std::get_if<Scenario>(&c)) return std::move(*s);
  throw ConfigError("expected a scenario config, got a benchmark config");
}

BenchConfig parse_bench_config(std::string_view text, const std::string& base_dir) {
  ParsedConfig c = parse_config(text, base_dir);
  if (auto* b = std::get_if<BenchConfig>(&c)) return std::move(*b);
  throw ConfigError("expected a benchmark config (no [benchmark] section)");
}

std::string format_scenario(const Scenario& sc) {
  std::string out;
  auto kv = [&out](const std::string& k, const std::string& v) {
    out += k + " = " + v + "\n";
  };
  out += "[scenario]\n";
  kv("name", sc.name);
  kv("task", to_string(sc.task));
  kv("controller", to_string(sc.controller));
  kv("seed", std::to_string(sc.seed));
  kv("dt", format_double(sc.dt));
  kv("horizon", format_double(sc.horizon));
  kv("clamp", sc.clamp ? "true" : "false");
  kv("theta0", format_doubles(std::vector<double>(sc.theta0.data(),
                                                  sc.theta0.data() + sc.theta0.size())));
  kv("weight_init_range", format_double(sc.weight_init_range));

  out += "\n[model]\n" + format_model_text(sc.model);

  if (sc.reference.kind == ReferenceKind::kFixed) {
    out += "\n[target]\n";
    kv("position", format_doubles(to_vec(sc.reference.center)));
  } else {
    const ReferenceTrajectory& t = sc.reference;
    out += "\n[reference]\n";
    kv("kind", t.kind == ReferenceKind::kCircle ? "circle" : "ellipse");
    kv("center", format_doubles(to_vec(t.center)));
    kv("radii", format_doubles({t.radius_u, t.radius_v}));
    kv("axis_u", format_doubles(to_vec(t.axis_u)));
    kv("axis_v", format_doubles(to_vec(t.axis_v)));
    kv("angular_speed", format_double(t.angular_speed));
    kv("phase", format_double(t.phase));
  }

  out += "\n[gains]\n";
  kv("Q", format_doubles(to_vec(Eigen::MatrixXd(sc.gains.q()))));
  kv("R", format_doubles(to_vec(sc.gains.r())));

  out += "\n[critic]\n";
  kv("alpha_initial", format_double(sc.schedule.alpha_initial));
  kv("alpha_final", format_double(sc.schedule.alpha_final));
  kv("n_switch", format_double(sc.schedule.n_switch));
  kv("clock_period", format_double(sc.schedule.clock_period));

  out += "\n[dls]\n";
  kv("damping", format_double(sc.dls.damping));
  kv("gain", format_double(sc.dls.gain));
  return out;
}

Scenario preset_scenario(std::string_view name) {
  Scenario sc;
  sc.model = KinematicModel::ur10();
  sc.gains = GainConfig::identity(sc.model.dof());
  sc.theta0 = JointVector(6);
  sc.theta0 << -0.51, -1.04, 1.48, -1.82, -1.45, -1.62;
  sc.dt = 0.008;
  sc.seed = 1;
  sc.clamp = false;
  sc.controller = ControllerKind::kCritic;
  if (name == "paper-regulation") {
    sc.name = "paper-regulation";
    sc.task = TaskKind::kRegulation;
    sc.reference = ReferenceTrajectory::fixed(Eigen::Vector3d(-0.658, 0.626, 0.407));
    sc.schedule = {100.0, 150.0, 50.0, 0.008};
    sc.horizon = 30.0;
    return sc;
  }
  if (name == "paper-tracking") {
    sc.name = "paper-tracking";
    sc.task = TaskKind::kTracking;
    sc.reference = ReferenceTrajectory::circle(
        Eigen::Vector3d(-0.7, 0.0, 0.5), 0.2, 0.075, Eigen::Vector3d::UnitY(),
        Eigen::Vector3d::UnitZ());
    sc.schedule = {20.0, 70.0, 10.0, 0.008};
    // 15 s transient plus one revolution (2 pi / 0.075 s).
    sc.horizon = 100.0;
    return sc;
  }
  throw ConfigError("unknown scenario preset '" + std::string(name) + "'");
}

bool is_scenario_preset(std::string_view name) {
  return name == "paper-regulation" || name == "paper-tracking";
}

BenchConfig preset_bench(std::string_view name) {
  if (name == "default-benchmark") return BenchConfig::defaults();
  throw ConfigError("unknown benchmark preset '" + std::string(name) + "'");
}

bool is_bench_preset(std::string_view name) { return name == "default-benchmark"; }

std::vector<std::string> preset_names() {
  return {"paper-regulation", "paper-tracking", "default-benchmark"};
}

}  // namespace snac
