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

#include "fourd/cli.h"

#include <algorithm>
#include <exception>

#include "CLI11.hpp"
#include "fourd/config.h"
#include "fourd/dataset_io.h"
#include "fourd/errors.h"
#include "fourd/maps_export.h"
#include "fourd/pipeline.h"
#include "fourd/sim_oracle.h"

namespace fourd {
namespace {

ToolkitConfig LoadConfig(const std::string& path) {
  if (path.empty()) return ToolkitConfig{};
  return ParseConfig(ReadFile(path));
}

void Emit(const std::string& path, const std::string& content,
          std::ostream& out) {
  if (path == "-") {
    out << content;
    out.flush();
    return;
  }
  WriteFileAtomic(path, content);
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"4D inertial navigation toolkit", "fourd"};
  app.require_subcommand(1);

  std::string input, config_path, output, profile_path, truth_path,
      trajectory_path, format, cells_path;

  CLI::App* integrate =
      app.add_subcommand("integrate", "Integrate an IMU dataset into a trajectory");
  integrate->add_option("--input", input, "IMU dataset CSV")->required();
  integrate->add_option("--config", config_path, "Configuration file");
  integrate->add_option("--out", output, "Trajectory CSV ('-' for stdout)")
      ->required();

  CLI::App* simulate =
      app.add_subcommand("simulate", "Generate a synthetic IMU dataset");
  simulate->add_option("--profile", profile_path, "Profile configuration")
      ->required();
  simulate->add_option("--out", output, "Dataset CSV ('-' for stdout)")
      ->required();
  simulate->add_option("--truth", truth_path, "Ground-truth trajectory CSV");

  CLI::App* map = app.add_subcommand("map", "Render a sensor map");
  map->add_option("--trajectory", trajectory_path, "Trajectory CSV")->required();
  map->add_option("--config", config_path, "Configuration file");
  map->add_option("--out", output, "PPM raster ('-' for stdout)")->required();
  map->add_option("--cells", cells_path, "Per-cell statistics CSV");

  CLI::App* exporter = app.add_subcommand("export", "Export a trajectory");
  exporter->add_option("--trajectory", trajectory_path, "Trajectory CSV")
      ->required();
  exporter->add_option("--format", format, "ply or csv")->required();
  exporter->add_option("--config", config_path, "Configuration file");
  exporter->add_option("--out", output, "Output file ('-' for stdout)")
      ->required();

  CLI::App* version = app.add_subcommand("version", "Print the version");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*version) {
      out << "fourd " << kVersion << '\n';
    } else if (*integrate) {
      const ToolkitConfig config = LoadConfig(config_path);
      const std::vector<ImuSample> samples = ParseDataset(ReadFile(input));
      const auto points = Run(samples, config.pipeline);
      Emit(output, ExportTrajectory(points, ExportFormat::kCsv), out);
    } else if (*simulate) {
      const ToolkitConfig config = LoadConfig(profile_path);
      if (truth_path.empty()) {
        Emit(output, SerializeDataset(sim::GenerateSamples(config.profile)),
             out);
      } else {
        const sim::Dataset data = sim::Generate(config.profile);
        Emit(output, SerializeDataset(data.samples), out);
        Emit(truth_path, ExportTrajectory(data.truth, ExportFormat::kCsv), out);
      }
    } else if (*map) {
      const ToolkitConfig config = LoadConfig(config_path);
      const auto points = ParseTrajectoryCsv(ReadFile(trajectory_path));
      const SensorMap rendered = RenderSensorMap(points, config.grid, config.ramp);
      Emit(output, EncodePpm(rendered.raster), out);
      if (!cells_path.empty()) Emit(cells_path, GridToCsv(rendered.grid), out);
    } else if (*exporter) {
      const ExportFormat fmt = ParseExportFormat(format);
      const ToolkitConfig config = LoadConfig(config_path);
      const auto points = ParseTrajectoryCsv(ReadFile(trajectory_path));
      Emit(output, ExportTrajectory(points, fmt, config.export_options), out);
    }
  } catch (const Error& e) {
    err << "fourd: error: " << e.what() << '\n';
    return e.code() == ErrorCode::kIoError ? kExitIo : kExitValidation;
  } catch (const std::exception& e) {
    err << "fourd: error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace fourd
