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

#ifndef FOURD_MAPS_EXPORT_H_
#define FOURD_MAPS_EXPORT_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "Eigen/Core"
#include "fourd/pipeline.h"

namespace fourd {

enum class ExportFormat { kCsv, kPly };

// "csv" or "ply"; anything else throws kUnsupportedFormat.
ExportFormat ParseExportFormat(std::string_view name);

struct ExportOptions {
  // Length of the arrow drawn for the fastest point.
  double arrow_scale = 1.0;
};

// Column names of the trajectory CSV, in order.
const std::vector<std::string>& TrajectoryCsvColumns();

// CSV: header plus one row per point, 9 significant digits. PLY: ASCII 1.0,
// one vertex per point carrying position, zeta, speed, gamma and a velocity
// arrow normalized so the fastest point's arrow is arrow_scale long.
// Throws kEmptyTrajectory for an empty input.
std::string ExportTrajectory(std::span<const TrajectoryPoint> points,
                             ExportFormat format,
                             const ExportOptions& options = {});

// Parses a trajectory CSV produced by ExportTrajectory.
std::vector<TrajectoryPoint> ParseTrajectoryCsv(std::string_view text);

using Rgb = std::array<std::uint8_t, 3>;

class ColorRamp {
 public:
  struct Stop {
    double value;
    Rgb color;
  };

  // Stops must be strictly increasing in value and strictly increasing in
  // `monotone_channel`; throws kInvalidConfig otherwise.
  ColorRamp(std::vector<Stop> stops, int monotone_channel);

  // Blue through green to red over [0, 1] m/s; red is the monotone channel.
  static ColorRamp Default();

  // Piecewise-linear interpolation, clamped to the end stops.
  Rgb Map(double value) const;

  const std::vector<Stop>& stops() const { return stops_; }
  int monotone_channel() const { return monotone_channel_; }

 private:
  std::vector<Stop> stops_;
  int monotone_channel_;
};

enum class MapProjection {
  kXY,     // ground plane
  kXZeta,  // x against the temporal axis
};

struct GridConfig {
  Eigen::Vector2d origin = Eigen::Vector2d::Zero();  // lower-left corner
  double cell_size = 0.1;
  int width = 64;
  int height = 64;
  // Refit origin, width and height to the data, keeping cell_size.
  bool auto_fit = true;
  MapProjection projection = MapProjection::kXY;
};

struct MapCell {
  int count = 0;
  double mean_speed = 0.0;  // m/s
  double mean_step = 0.0;   // mean |dT| between consecutive points, meters
};

struct SensorMapGrid {
  Eigen::Vector2d origin = Eigen::Vector2d::Zero();
  double cell_size = 0.0;
  int width = 0;
  int height = 0;
  std::vector<MapCell> cells;  // row-major, cell (ix, iy) at iy * width + ix

  const MapCell& at(int ix, int iy) const { return cells[iy * width + ix]; }
};

struct Raster {
  int width = 0;
  int height = 0;
  std::vector<Rgb> pixels;  // row 0 is the maximum of the vertical axis

  const Rgb& at(int row, int col) const { return pixels[row * width + col]; }
};

inline constexpr Rgb kBackground = {255, 255, 255};

struct SensorMap {
  SensorMapGrid grid;
  Raster raster;
};

// Bins points by their projected position and colors each occupied cell by
// its mean speed. Throws kDegenerateGrid for a non-positive cell size or
// extent and kPointOutOfBounds for points outside a fixed grid.
SensorMap RenderSensorMap(std::span<const TrajectoryPoint> points,
                          const GridConfig& grid, const ColorRamp& ramp);

// Binary P6 with max value 255.
std::string EncodePpm(const Raster& raster);

// One row per cell: ix, iy, x_min, y_min, count, mean_speed, mean_step.
std::string GridToCsv(const SensorMapGrid& grid);

}  // namespace fourd

#endif  // FOURD_MAPS_EXPORT_H_
