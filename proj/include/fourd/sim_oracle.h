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

#ifndef FOURD_SIM_ORACLE_H_
#define FOURD_SIM_ORACLE_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fourd/pipeline.h"

// Synthetic IMU datasets with closed-form ground truth. The truth series is
// computed without going through the pipeline so it can serve as an
// independent reference for it.
namespace fourd::sim {

enum class MotionKind { kRest, kConstantAccel, kLinearRamp, kCircle, kSinusoid };

std::string_view MotionKindName(MotionKind kind);
// Throws Error(kInvalidProfile) for unknown names.
MotionKind ParseMotionKind(std::string_view name);

struct NoiseSigma {
  double accel = 0.0;  // m/s^2
  double gyro = 0.0;   // rad/s
  double mag = 0.0;    // microtesla
};

// Samples are emitted at t_k = k / rate for k = 0 .. round(duration * rate),
// so both ends of [0, duration] are included. Accelerations are world-frame
// and gravity-free; the magnetometer sees `magnetic_field` rotated into the
// yawing body frame.
struct MotionProfile {
  MotionKind kind = MotionKind::kRest;
  // kConstantAccel: the acceleration. kSinusoid: the amplitude of
  // accel * sin(2 pi t / period).
  Vec3 accel = Vec3::Zero();
  // kLinearRamp: a(t) = jerk * t.
  Vec3 jerk = Vec3::Zero();
  // Yaw rate for every kind except kCircle, whose rate is 2 pi / period.
  double angular_rate = 0.0;
  double radius = 1.0;   // kCircle
  double period = 10.0;  // kCircle, kSinusoid
  double duration = 1.0;
  double rate = 100.0;
  NoiseSigma noise;
  std::uint64_t seed = 0;
  Vec3 magnetic_field = Vec3(20.0, 0.0, -40.0);
  RelativityConfig relativity;

  // Throws kInvalidProfile.
  void Validate() const;
  int SampleCount() const;
};

struct Dataset {
  std::vector<ImuSample> samples;
  std::vector<TrajectoryPoint> truth;
};

// Samples plus truth. Throws kInvalidProfile when the motion reaches c,
// since the truth has no Lorentz factor there.
Dataset Generate(const MotionProfile& profile);

// Samples only; valid for any profile, including superluminal ones.
std::vector<ImuSample> GenerateSamples(const MotionProfile& profile);

// State at t = 0, to seed PipelineConfig::initial_state.
KinematicState InitialState(const MotionProfile& profile);

struct DriftMetrics {
  double final_position_error = 0.0;  // m
  double max_position_error = 0.0;    // m
  double rms_position_error = 0.0;    // m
  double heading_error = 0.0;         // |psi_est - psi_truth| at the end, rad
};

// Spatial position errors between matching points. Throws kLengthMismatch
// when lengths or timestamps disagree.
DriftMetrics DriftReport(std::span<const TrajectoryPoint> estimated,
                         std::span<const TrajectoryPoint> truth);

}  // namespace fourd::sim

#endif  // FOURD_SIM_ORACLE_H_
