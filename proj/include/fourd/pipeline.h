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

#ifndef FOURD_PIPELINE_H_
#define FOURD_PIPELINE_H_

#include <optional>
#include <span>
#include <vector>

#include "fourd/core4d.h"
#include "fourd/errors.h"
#include "fourd/frames.h"
#include "fourd/strapdown.h"

namespace fourd {

// How the temporal translation T_zeta is formed from spatial motion.
enum class ZetaMode {
  // zeta_n = tau_gamma * |T_n - T_0|, a function of the total displacement.
  kCumulative,
  // zeta_n = zeta_{n-1} + tau_gamma * |T_n - T_{n-1}|.
  kIncremental,
};

// Which acceleration feeds the look-ahead (tail) term of the translation
// update: the world-frame linear acceleration as measured, or with the
// accel bias removed.
enum class TailSource { kRaw, kCorrected };

struct PipelineConfig {
  RelativityConfig relativity;
  CorrectionTerms corrections;
  RotationOrder rotation_order = kDefaultRotationOrder;
  KinematicState initial_state;
  // Empty means samples are already world-frame and gravity-free.
  std::vector<FrameTransform> frame_chain;
  FrameId sample_frame = FrameId::kSensorIntrinsic;
  double tail_window = 0.0;  // seconds
  TailSource tail_source = TailSource::kRaw;
  ZetaMode zeta_mode = ZetaMode::kCumulative;

  void Validate() const;
};

struct TrajectoryPoint {
  double t = 0.0;
  FourVector chi;
  Vec3 velocity = Vec3::Zero();
  double speed = 0.0;
  double gamma = 1.0;
  // Scale used for this point's zeta and primed angles, from the previous
  // step's velocity.
  double tau_gamma = 0.0;
  EulerAngles angles;
  PrimedAngles primed;
};

struct RunOutcome {
  std::vector<TrajectoryPoint> points;  // every point computed before failure
  std::optional<Error> error;
};

// Integrates the samples into one trajectory point per sample. The first
// point is the configured initial state. Throws kEmptyDataset,
// kTooFewSamples, kNonMonotonicTime, or kSuperluminalSpeed (carrying the
// first offending timestamp).
std::vector<TrajectoryPoint> Run(std::span<const ImuSample> samples,
                                 const PipelineConfig& config);

// Like Run, but keeps the partial trajectory when a step fails.
RunOutcome RunUntilFailure(std::span<const ImuSample> samples,
                           const PipelineConfig& config);

// Returns point.chi after re-checking speed = |velocity| and that all fields
// are finite. Throws kInconsistentPoint otherwise.
FourVector FourPosition(const TrajectoryPoint& point);

// The 10-DoF pose of a trajectory point. ApplyPose(pose, origin) == chi.
Pose4D PointPose(const TrajectoryPoint& point,
                 const RotationOrder& order = kDefaultRotationOrder);

}  // namespace fourd

#endif  // FOURD_PIPELINE_H_
