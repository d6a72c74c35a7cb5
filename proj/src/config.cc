/*
 * Copyright 2026 The fourd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fourd/config.h"

#include <charconv>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "fourd/errors.h"
#include "fourd/text.h"

namespace fourd {
namespace {

struct FrameEntry {
  std::optional<FrameId> from;
  std::optional<FrameId> to;
  Matrix3 rotation = Matrix3::Identity();
  Vec3 translation = Vec3::Zero();
};

class Parser {
 public:
  explicit Parser(ToolkitConfig* config) : config_(*config) {}

  void Assign(std::string_view key, std::string_view value, int line) {
    line_ = line;
    if (!seen_.insert(std::string(key)).second) Fail("repeated key '" + std::string(key) + "'");
    if (key.starts_with("frame.")) return AssignFrame(key, value);
    if (key.starts_with("ramp.stop.")) return AssignStop(key, value);
    const auto it = Handlers().find(std::string(key));
    if (it == Handlers().end()) Fail("unknown key '" + std::string(key) + "'");
    it->second(*this, value);
  }

  void Finish() {
    PipelineConfig& p = config_.pipeline;
    for (size_t i = 0; i < frames_.size(); ++i) {
      const auto it = frames_.find(static_cast<int>(i));
      if (it == frames_.end()) {
        throw Error(ErrorCode::kInvalidConfig,
                    "frame indices must be contiguous from 0");
      }
      const FrameEntry& e = it->second;
      if (!e.from || !e.to) {
        throw Error(ErrorCode::kInvalidConfig,
                    "frame." + std::to_string(i) + " needs both from and to");
      }
      FrameTransform f;
      f.from = *e.from;
      f.to = *e.to;
      f.rotation = e.rotation;
      f.translation = e.translation;
      if (gravity_) f.gravity = *gravity_;
      p.frame_chain.push_back(f);
    }
    if (!stops_.empty()) {
      std::vector<ColorRamp::Stop> stops;
      for (size_t i = 0; i < stops_.size(); ++i) {
        const auto it = stops_.find(static_cast<int>(i));
        if (it == stops_.end()) {
          throw Error(ErrorCode::kInvalidConfig,
                      "ramp stop indices must be contiguous from 0");
        }
        stops.push_back(it->second);
      }
      config_.ramp = ColorRamp(std::move(stops), ramp_channel_);
    } else if (ramp_channel_ != config_.ramp.monotone_channel()) {
      config_.ramp = ColorRamp(config_.ramp.stops(), ramp_channel_);
    }
    config_.profile.relativity = p.relativity;

    p.Validate();
    config_.profile.Validate();
    if (!(config_.export_options.arrow_scale > 0.0)) {
      throw Error(ErrorCode::kInvalidConfig, "arrow_scale must be > 0");
    }
    if (!(config_.grid.cell_size > 0.0)) {
      throw Error(ErrorCode::kInvalidConfig, "grid.cell_size must be > 0");
    }
    if (config_.grid.width <= 0 || config_.grid.height <= 0) {
      throw Error(ErrorCode::kInvalidConfig, "grid size must be positive");
    }
  }

 private:
  using Handler = std::function<void(Parser&, std::string_view)>;

  [[noreturn]] void Fail(const std::string& message) const {
    throw Error(ErrorCode::kInvalidConfig, message, line_);
  }

  double Number(std::string_view value) const {
    const auto v = text::ParseNumber(value);
    if (!v) Fail("invalid number '" + std::string(value) + "'");
    return *v;
  }

  std::vector<double> Numbers(std::string_view value, size_t count) const {
    const auto fields = text::Split(value, ',');
    if (fields.size() != count) {
      Fail("expected " + std::to_string(count) + " comma-separated values");
    }
    std::vector<double> out;
    for (std::string_view f : fields) out.push_back(Number(f));
    return out;
  }

  Vec3 Vector(std::string_view value) const {
    const auto v = Numbers(value, 3);
    return Vec3(v[0], v[1], v[2]);
  }

  template <typename Int>
  Int Integer(std::string_view value) const {
    value = text::Trim(value);
    Int out{};
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), out);
    if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
      Fail("invalid integer '" + std::string(value) + "'");
    }
    return out;
  }

  bool Boolean(std::string_view value) const {
    if (value == "true") return true;
    if (value == "false") return false;
    Fail("expected true or false, got '" + std::string(value) + "'");
  }

  // Wraps a parse helper that throws a non-config Error so the failure is
  // reported against the current line.
  template <typename F>
  auto Guard(F&& f) const {
    try {
      return f();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInvalidConfig && e.line()) throw;
      Fail(e.what());
    }
  }

  int Index(std::string_view digits) const {
    const int i = Integer<int>(digits);
    if (i < 0 || i > 255) Fail("index out of range");
    return i;
  }

  void AssignFrame(std::string_view key, std::string_view value) {
    key.remove_prefix(std::string_view("frame.").size());
    const size_t dot = key.find('.');
    if (dot == std::string_view::npos) Fail("malformed frame key");
    FrameEntry& e = frames_[Index(key.substr(0, dot))];
    const std::string_view field = key.substr(dot + 1);
    if (field == "from") {
      e.from = Guard([&] { return ParseFrame(value); });
    } else if (field == "to") {
      e.to = Guard([&] { return ParseFrame(value); });
    } else if (field == "rotation") {
      const auto v = Numbers(value, 9);
      for (int i = 0; i < 9; ++i) e.rotation(i / 3, i % 3) = v[i];
    } else if (field == "translation") {
      e.translation = Vector(value);
    } else {
      Fail("unknown frame field '" + std::string(field) + "'");
    }
  }

  void AssignStop(std::string_view key, std::string_view value) {
    key.remove_prefix(std::string_view("ramp.stop.").size());
    const int index = Index(key);
    const auto v = Numbers(value, 4);
    Rgb color;
    for (int c = 0; c < 3; ++c) {
      if (v[c + 1] < 0 || v[c + 1] > 255 || v[c + 1] != static_cast<int>(v[c + 1])) {
        Fail("ramp colors must be integers in [0, 255]");
      }
      color[c] = static_cast<std::uint8_t>(v[c + 1]);
    }
    stops_[index] = {v[0], color};
  }

  static const std::map<std::string, Handler>& Handlers() {
    static const std::map<std::string, Handler> kHandlers = {
        {"c", [](Parser& p, std::string_view v) {
           p.config_.pipeline.relativity.c = p.Number(v);
         }},
        {"epsilon_speed", [](Parser& p, std::string_view v) {
           p.config_.pipeline.relativity.epsilon_speed = p.Number(v);
         }},
        {"accel_bias", [](Parser& p, std::string_view v) {
           p.config_.pipeline.corrections.accel_bias = p.Vector(v);
         }},
        {"velocity_correction", [](Parser& p, std::string_view v) {
           p.config_.pipeline.corrections.velocity_correction = p.Vector(v);
         }},
        {"rotation_order", [](Parser& p, std::string_view v) {
           const auto names = text::Split(v, ',');
           if (names.size() != 6) p.Fail("rotation_order needs six planes");
           RotationOrder order;
           for (size_t i = 0; i < 6; ++i) {
             order[i] = p.Guard([&] { return ParsePlane(text::Trim(names[i])); });
           }
           p.Guard([&] {
             ValidateRotationOrder(order);
             return 0;
           });
           p.config_.pipeline.rotation_order = order;
         }},
        {"sample_frame", [](Parser& p, std::string_view v) {
           p.config_.pipeline.sample_frame = p.Guard([&] { return ParseFrame(v); });
         }},
        {"gravity", [](Parser& p, std::string_view v) { p.gravity_ = p.Vector(v); }},
        {"tail_window", [](Parser& p, std::string_view v) {
           p.config_.pipeline.tail_window = p.Number(v);
         }},
        {"tail_source", [](Parser& p, std::string_view v) {
           if (v == "raw") {
             p.config_.pipeline.tail_source = TailSource::kRaw;
           } else if (v == "corrected") {
             p.config_.pipeline.tail_source = TailSource::kCorrected;
           } else {
             p.Fail("tail_source must be raw or corrected");
           }
         }},
        {"zeta_mode", [](Parser& p, std::string_view v) {
           if (v == "cumulative") {
             p.config_.pipeline.zeta_mode = ZetaMode::kCumulative;
           } else if (v == "incremental") {
             p.config_.pipeline.zeta_mode = ZetaMode::kIncremental;
           } else {
             p.Fail("zeta_mode must be cumulative or incremental");
           }
         }},
        {"initial.velocity", [](Parser& p, std::string_view v) {
           p.config_.pipeline.initial_state.velocity = p.Vector(v);
         }},
        {"initial.translation", [](Parser& p, std::string_view v) {
           p.config_.pipeline.initial_state.translation = p.Vector(v);
         }},
        {"initial.angles", [](Parser& p, std::string_view v) {
           const Vec3 a = p.Vector(v);
           p.config_.pipeline.initial_state.angles = {a.x(), a.y(), a.z()};
         }},
        {"grid.origin", [](Parser& p, std::string_view v) {
           const auto o = p.Numbers(v, 2);
           p.config_.grid.origin = Eigen::Vector2d(o[0], o[1]);
         }},
        {"grid.cell_size", [](Parser& p, std::string_view v) {
           p.config_.grid.cell_size = p.Number(v);
         }},
        {"grid.width", [](Parser& p, std::string_view v) {
           p.config_.grid.width = p.Integer<int>(v);
         }},
        {"grid.height", [](Parser& p, std::string_view v) {
           p.config_.grid.height = p.Integer<int>(v);
         }},
        {"grid.auto_fit", [](Parser& p, std::string_view v) {
           p.config_.grid.auto_fit = p.Boolean(v);
         }},
        {"grid.projection", [](Parser& p, std::string_view v) {
           if (v == "xy") {
             p.config_.grid.projection = MapProjection::kXY;
           } else if (v == "x_zeta") {
             p.config_.grid.projection = MapProjection::kXZeta;
           } else {
             p.Fail("grid.projection must be xy or x_zeta");
           }
         }},
        {"ramp.channel", [](Parser& p, std::string_view v) {
           if (v == "r") {
             p.ramp_channel_ = 0;
           } else if (v == "g") {
             p.ramp_channel_ = 1;
           } else if (v == "b") {
             p.ramp_channel_ = 2;
           } else {
             p.Fail("ramp.channel must be r, g or b");
           }
         }},
        {"arrow_scale", [](Parser& p, std::string_view v) {
           p.config_.export_options.arrow_scale = p.Number(v);
         }},
        {"profile.kind", [](Parser& p, std::string_view v) {
           p.config_.profile.kind = p.Guard([&] { return sim::ParseMotionKind(v); });
         }},
        {"profile.accel", [](Parser& p, std::string_view v) {
           p.config_.profile.accel = p.Vector(v);
         }},
        {"profile.jerk", [](Parser& p, std::string_view v) {
           p.config_.profile.jerk = p.Vector(v);
         }},
        {"profile.magnetic_field", [](Parser& p, std::string_view v) {
           p.config_.profile.magnetic_field = p.Vector(v);
         }},
        {"profile.angular_rate", [](Parser& p, std::string_view v) {
           p.config_.profile.angular_rate = p.Number(v);
         }},
        {"profile.radius", [](Parser& p, std::string_view v) {
           p.config_.profile.radius = p.Number(v);
         }},
        {"profile.period", [](Parser& p, std::string_view v) {
           p.config_.profile.period = p.Number(v);
         }},
        {"profile.duration", [](Parser& p, std::string_view v) {
           p.config_.profile.duration = p.Number(v);
         }},
        {"profile.rate", [](Parser& p, std::string_view v) {
           p.config_.profile.rate = p.Number(v);
         }},
        {"profile.noise.accel", [](Parser& p, std::string_view v) {
           p.config_.profile.noise.accel = p.Number(v);
         }},
        {"profile.noise.gyro", [](Parser& p, std::string_view v) {
           p.config_.profile.noise.gyro = p.Number(v);
         }},
        {"profile.noise.mag", [](Parser& p, std::string_view v) {
           p.config_.profile.noise.mag = p.Number(v);
         }},
        {"seed", [](Parser& p, std::string_view v) {
           p.config_.profile.seed = p.Integer<std::uint64_t>(v);
         }},
    };
    return kHandlers;
  }

  ToolkitConfig& config_;
  int line_ = 0;
  std::set<std::string> seen_;
  std::map<int, FrameEntry> frames_;
  std::map<int, ColorRamp::Stop> stops_;
  std::optional<Vec3> gravity_;
  int ramp_channel_ = ColorRamp::Default().monotone_channel();
};

}  // namespace

ToolkitConfig ParseConfig(std::string_view content) {
  ToolkitConfig config;
  Parser parser(&config);
  int line_number = 0;
  for (std::string_view line : text::Lines(content)) {
    ++line_number;
    const std::string_view trimmed = text::Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const size_t eq = trimmed.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParseError, "expected key = value", line_number);
    }
    const std::string_view key = text::Trim(trimmed.substr(0, eq));
    const std::string_view value = text::Trim(trimmed.substr(eq + 1));
    if (key.empty()) {
      throw Error(ErrorCode::kParseError, "missing key", line_number);
    }
    parser.Assign(key, value, line_number);
  }
  try {
    parser.Finish();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidConfig) throw;
    throw Error(ErrorCode::kInvalidConfig, e.what());
  }
  return config;
}

}  // namespace fourd
