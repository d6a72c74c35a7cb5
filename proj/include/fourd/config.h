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

#ifndef FOURD_CONFIG_H_
#define FOURD_CONFIG_H_

#include <string_view>

#include "fourd/maps_export.h"
#include "fourd/pipeline.h"
#include "fourd/sim_oracle.h"

namespace fourd {

// Everything a CLI invocation can be configured with. Each subcommand reads
// the part it needs.
struct ToolkitConfig {
  PipelineConfig pipeline;
  GridConfig grid;
  ColorRamp ramp = ColorRamp::Default();
  ExportOptions export_options;
  sim::MotionProfile profile;
};

// Parses the flat key=value configuration text. One assignment per line,
// '#' starts a comment line, vectors are comma-separated:
//
//   c = 1.0
//   epsilon_speed = 1e-12
//   accel_bias = 0,0,0
//   velocity_correction = 0,0,0
//   rotation_order = xy,xz,yz,zeta_x,zeta_y,zeta_z
//   sample_frame = sensor_intrinsic
//   frame.0.from = sensor_intrinsic
//   frame.0.to = world
//   frame.0.rotation = 1,0,0,0,1,0,0,0,1      (row-major)
//   frame.0.translation = 0,0,0
//   gravity = 0,0,9.81                        (applies to every frame link)
//   tail_window = 0
//   tail_source = raw | corrected
//   zeta_mode = cumulative | incremental
//   initial.velocity = 0,0,0
//   initial.translation = 0,0,0
//   initial.angles = 0,0,0                    (psi, theta, phi)
//   grid.origin = 0,0
//   grid.cell_size = 0.1
//   grid.width = 64
//   grid.height = 64
//   grid.auto_fit = true
//   grid.projection = xy | x_zeta
//   ramp.channel = r | g | b
//   ramp.stop.0 = 0,20,40,200                 (value, r, g, b)
//   arrow_scale = 1.0
//   profile.kind = rest | constant_accel | linear_ramp | circle | sinusoid
//   profile.accel, profile.jerk, profile.magnetic_field = x,y,z
//   profile.angular_rate, profile.radius, profile.period,
//   profile.duration, profile.rate = <number>
//   profile.noise.accel, profile.noise.gyro, profile.noise.mag = <sigma>
//   seed = 42
//
// Unknown or repeated keys and invalid values throw kInvalidConfig (or
// kParseError for malformed lines) with the line number. The assembled
// configuration is validated before it is returned.
ToolkitConfig ParseConfig(std::string_view content);

}  // namespace fourd

#endif  // FOURD_CONFIG_H_
