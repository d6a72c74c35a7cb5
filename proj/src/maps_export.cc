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

#include "fourd/maps_export.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fourd/errors.h"
#include "fourd/text.h"

namespace fourd {
namespace {

constexpr int kSignificantDigits = 9;
constexpr long long kMaxCells = 1LL << 24;

std::string Num(double v) { return text::FormatNumber(v, kSignificantDigits); }

void RequireNonEmpty(std::span<const TrajectoryPoint> points) {
  if (points.empty()) {
    throw Error(ErrorCode::kEmptyTrajectory, "trajectory has no points");
  }
}

std::string ToCsv(std::span<const TrajectoryPoint> points) {
  std::ostringstream out;
  const auto& columns = TrajectoryCsvColumns();
  for (size_t i = 0; i < columns.size(); ++i) {
    out << (i ? "," : "") << columns[i];
  }
  out << '\n';
  for (const TrajectoryPoint& p : points) {
    const double row[] = {
        p.t,           p.chi.zeta,     p.chi.x,       p.chi.y,
        p.chi.z,       p.velocity.x(), p.velocity.y(), p.velocity.z(),
        p.speed,       p.gamma,        p.tau_gamma,   p.angles.psi,
        p.angles.theta, p.angles.phi,  p.primed.psi_p, p.primed.theta_p,
        p.primed.phi_p};
    for (size_t i = 0; i < std::size(row); ++i) {
      out << (i ? "," : "") << Num(row[i]);
    }
    out << '\n';
  }
  return out.str();
}

std::string ToPly(std::span<const TrajectoryPoint> points,
                  const ExportOptions& options) {
  if (!(options.arrow_scale > 0.0) || !std::isfinite(options.arrow_scale)) {
    throw Error(ErrorCode::kInvalidConfig, "arrow_scale must be finite and > 0");
  }
  double max_speed = 0.0;
  for (const TrajectoryPoint& p : points) {
    max_speed = std::max(max_speed, p.velocity.norm());
  }
  const double scale = max_speed > 0.0 ? options.arrow_scale / max_speed : 0.0;

  std::ostringstream out;
  out << "ply\n"
      << "format ascii 1.0\n"
      << "comment fourd trajectory, arrows scale velocity to arrow_scale "
      << Num(options.arrow_scale) << "\n"
      << "element vertex " << points.size() << "\n";
  for (const char* name : {"x", "y", "z", "zeta", "speed", "gamma", "arrow_x",
                           "arrow_y", "arrow_z"}) {
    out << "property double " << name << "\n";
  }
  out << "end_header\n";
  for (const TrajectoryPoint& p : points) {
    const Vec3 arrow = p.velocity * scale;
    out << Num(p.chi.x) << ' ' << Num(p.chi.y) << ' ' << Num(p.chi.z) << ' '
        << Num(p.chi.zeta) << ' ' << Num(p.speed) << ' ' << Num(p.gamma) << ' '
        << Num(arrow.x()) << ' ' << Num(arrow.y()) << ' ' << Num(arrow.z())
        << '\n';
  }
  return out.str();
}

Eigen::Vector2d Project(const TrajectoryPoint& p, MapProjection projection) {
  return projection == MapProjection::kXY ? Eigen::Vector2d(p.chi.x, p.chi.y)
                                          : Eigen::Vector2d(p.chi.x, p.chi.zeta);
}

long long CellIndex(double coordinate, double origin, double cell_size) {
  return static_cast<long long>(std::floor((coordinate - origin) / cell_size));
}

SensorMapGrid LayoutGrid(std::span<const TrajectoryPoint> points,
                         const GridConfig& config) {
  if (!(config.cell_size > 0.0) || !std::isfinite(config.cell_size)) {
    throw Error(ErrorCode::kDegenerateGrid, "cell_size must be > 0");
  }
  SensorMapGrid grid;
  grid.cell_size = config.cell_size;
  if (config.auto_fit && !points.empty()) {
    Eigen::Vector2d lo = Project(points[0], config.projection);
    Eigen::Vector2d hi = lo;
    for (const TrajectoryPoint& p : points) {
      const Eigen::Vector2d q = Project(p, config.projection);
      lo = lo.cwiseMin(q);
      hi = hi.cwiseMax(q);
    }
    grid.origin = lo;
    const long long w = CellIndex(hi.x(), lo.x(), config.cell_size) + 1;
    const long long h = CellIndex(hi.y(), lo.y(), config.cell_size) + 1;
    if (w * h > kMaxCells) {
      throw Error(ErrorCode::kDegenerateGrid,
                  "auto-fit grid exceeds " + std::to_string(kMaxCells) +
                      " cells; increase cell_size");
    }
    grid.width = static_cast<int>(w);
    grid.height = static_cast<int>(h);
  } else {
    grid.origin = config.origin;
    grid.width = config.width;
    grid.height = config.height;
  }
  if (grid.width <= 0 || grid.height <= 0 || !grid.origin.allFinite() ||
      static_cast<long long>(grid.width) * grid.height > kMaxCells) {
    throw Error(ErrorCode::kDegenerateGrid,
                "grid must have a positive, bounded number of cells");
  }
  grid.cells.assign(static_cast<size_t>(grid.width) * grid.height, MapCell{});
  return grid;
}

}  // namespace

ExportFormat ParseExportFormat(std::string_view name) {
  if (name == "csv") return ExportFormat::kCsv;
  if (name == "ply") return ExportFormat::kPly;
  throw Error(ErrorCode::kUnsupportedFormat,
              "unsupported export format '" + std::string(name) + "'");
}

const std::vector<std::string>& TrajectoryCsvColumns() {
  static const std::vector<std::string> kColumns = {
      "t",     "zeta",      "x",   "y",     "z",   "vx",
      "vy",    "vz",        "speed", "gamma", "tau_gamma", "psi",
      "theta", "phi",       "psi_p", "theta_p", "phi_p"};
  return kColumns;
}

std::string ExportTrajectory(std::span<const TrajectoryPoint> points,
                             ExportFormat format, const ExportOptions& options) {
  RequireNonEmpty(points);
  switch (format) {
    case ExportFormat::kCsv: return ToCsv(points);
    case ExportFormat::kPly: return ToPly(points, options);
  }
  throw Error(ErrorCode::kUnsupportedFormat, "unsupported export format");
}

std::vector<TrajectoryPoint> ParseTrajectoryCsv(std::string_view content) {
  const auto& columns = TrajectoryCsvColumns();
  std::vector<TrajectoryPoint> points;
  bool header_seen = false;
  int line_number = 0;
  for (std::string_view line : text::Lines(content)) {
    ++line_number;
    const std::string_view trimmed = text::Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto fields = text::Split(trimmed, ',');
    if (fields.size() != columns.size()) {
      throw Error(ErrorCode::kColumnCountMismatch,
                  "expected " + std::to_string(columns.size()) +
                      " columns, found " + std::to_string(fields.size()),
                  line_number);
    }
    if (!header_seen) {
      for (size_t i = 0; i < columns.size(); ++i) {
        if (text::Trim(fields[i]) != columns[i]) {
          throw Error(ErrorCode::kParseError,
                      "unexpected header column '" +
                          std::string(text::Trim(fields[i])) + "'",
                      line_number);
        }
      }
      header_seen = true;
      continue;
    }
    double v[17];
    for (size_t i = 0; i < columns.size(); ++i) {
      const auto parsed = text::ParseNumber(fields[i]);
      if (!parsed) {
        throw Error(ErrorCode::kParseError,
                    "invalid number in column '" + columns[i] + "'",
                    line_number);
      }
      v[i] = *parsed;
    }
    TrajectoryPoint p;
    p.t = v[0];
    p.chi = {v[1], v[2], v[3], v[4]};
    p.velocity = Vec3(v[5], v[6], v[7]);
    p.speed = v[8];
    p.gamma = v[9];
    p.tau_gamma = v[10];
    p.angles = {v[11], v[12], v[13]};
    p.primed = {v[14], v[15], v[16]};
    if (!points.empty() && !(p.t > points.back().t)) {
      throw Error(ErrorCode::kNonMonotonicTime, "time does not advance",
                  line_number, p.t);
    }
    points.push_back(p);
  }
  if (!header_seen) {
    throw Error(ErrorCode::kParseError, "missing trajectory header");
  }
  return points;
}

ColorRamp::ColorRamp(std::vector<Stop> stops, int monotone_channel)
    : stops_(std::move(stops)), monotone_channel_(monotone_channel) {
  if (monotone_channel_ < 0 || monotone_channel_ > 2) {
    throw Error(ErrorCode::kInvalidConfig, "ramp channel must be r, g or b");
  }
  if (stops_.size() < 2) {
    throw Error(ErrorCode::kInvalidConfig, "ramp needs at least two stops");
  }
  for (size_t i = 0; i < stops_.size(); ++i) {
    if (!std::isfinite(stops_[i].value)) {
      throw Error(ErrorCode::kInvalidConfig, "ramp stop values must be finite");
    }
    if (i == 0) continue;
    if (!(stops_[i].value > stops_[i - 1].value)) {
      throw Error(ErrorCode::kInvalidConfig,
                  "ramp stop values must be strictly increasing");
    }
    if (!(stops_[i].color[monotone_channel_] >
          stops_[i - 1].color[monotone_channel_])) {
      throw Error(ErrorCode::kInvalidConfig,
                  "ramp monotone channel must strictly increase across stops");
    }
  }
}

ColorRamp ColorRamp::Default() {
  return ColorRamp({{0.0, {20, 40, 200}},
                    {0.5, {140, 220, 60}},
                    {1.0, {250, 40, 20}}},
                   0);
}

Rgb ColorRamp::Map(double value) const {
  if (!(value > stops_.front().value)) return stops_.front().color;
  if (value >= stops_.back().value) return stops_.back().color;
  const auto upper = std::upper_bound(
      stops_.begin(), stops_.end(), value,
      [](double v, const Stop& s) { return v < s.value; });
  const Stop& b = *upper;
  const Stop& a = *(upper - 1);
  const double w = (value - a.value) / (b.value - a.value);
  Rgb out;
  for (int c = 0; c < 3; ++c) {
    const double mixed = (1.0 - w) * a.color[c] + w * b.color[c];
    out[c] = static_cast<std::uint8_t>(
        std::clamp(std::lround(mixed), 0L, 255L));
  }
  return out;
}

SensorMap RenderSensorMap(std::span<const TrajectoryPoint> points,
                          const GridConfig& config, const ColorRamp& ramp) {
  SensorMap map;
  SensorMapGrid& grid = map.grid;
  grid = LayoutGrid(points, config);

  std::vector<double> speed_sum(grid.cells.size(), 0.0);
  std::vector<double> step_sum(grid.cells.size(), 0.0);
  for (size_t i = 0; i < points.size(); ++i) {
    const Eigen::Vector2d q = Project(points[i], config.projection);
    const long long ix = CellIndex(q.x(), grid.origin.x(), grid.cell_size);
    const long long iy = CellIndex(q.y(), grid.origin.y(), grid.cell_size);
    if (!q.allFinite() || ix < 0 || iy < 0 || ix >= grid.width ||
        iy >= grid.height) {
      throw Error(ErrorCode::kPointOutOfBounds,
                  "point (" + Num(q.x()) + ", " + Num(q.y()) +
                      ") lies outside the grid",
                  std::nullopt, points[i].t);
    }
    const size_t cell = static_cast<size_t>(iy * grid.width + ix);
    const double step =
        i == 0 ? 0.0
               : (points[i].chi.spatial() - points[i - 1].chi.spatial()).norm();
    ++grid.cells[cell].count;
    speed_sum[cell] += points[i].speed;
    step_sum[cell] += step;
  }

  Raster& raster = map.raster;
  raster.width = grid.width;
  raster.height = grid.height;
  raster.pixels.assign(grid.cells.size(), kBackground);
  for (int iy = 0; iy < grid.height; ++iy) {
    for (int ix = 0; ix < grid.width; ++ix) {
      const size_t cell = static_cast<size_t>(iy) * grid.width + ix;
      MapCell& c = grid.cells[cell];
      if (c.count == 0) continue;
      c.mean_speed = speed_sum[cell] / c.count;
      c.mean_step = step_sum[cell] / c.count;
      const int row = grid.height - 1 - iy;
      raster.pixels[static_cast<size_t>(row) * grid.width + ix] =
          ramp.Map(c.mean_speed);
    }
  }
  return map;
}

std::string EncodePpm(const Raster& raster) {
  std::string out = "P6\n" + std::to_string(raster.width) + " " +
                    std::to_string(raster.height) + "\n255\n";
  out.reserve(out.size() + raster.pixels.size() * 3);
  for (const Rgb& px : raster.pixels) {
    out.push_back(static_cast<char>(px[0]));
    out.push_back(static_cast<char>(px[1]));
    out.push_back(static_cast<char>(px[2]));
  }
  return out;
}

std::string GridToCsv(const SensorMapGrid& grid) {
  std::ostringstream out;
  out << "ix,iy,x_min,y_min,count,mean_speed,mean_step\n";
  for (int iy = 0; iy < grid.height; ++iy) {
    for (int ix = 0; ix < grid.width; ++ix) {
      const MapCell& c = grid.at(ix, iy);
      out << ix << ',' << iy << ','
          << Num(grid.origin.x() + ix * grid.cell_size) << ','
          << Num(grid.origin.y() + iy * grid.cell_size) << ',' << c.count
          << ',' << Num(c.mean_speed) << ',' << Num(c.mean_step) << '\n';
    }
  }
  return out.str();
}

}  // namespace fourd
