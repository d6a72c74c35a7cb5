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

#ifndef FOURD_FRAMES_H_
#define FOURD_FRAMES_H_

#include <string_view>
#include <vector>

#include "Eigen/Core"
#include "fourd/strapdown.h"

namespace fourd {

using Matrix3 = Eigen::Matrix3d;

// Intrinsic sensor/camera frames feed extrinsic frames, which feed the
// shared world frame.
enum class FrameId {
  kSensorIntrinsic,
  kCameraIntrinsic,
  kSensorExtrinsic,
  kCameraExtrinsic,
  kWorld,
};

std::string_view FrameName(FrameId id);
// Throws Error(kInvalidConfig) for unknown names.
FrameId ParseFrame(std::string_view name);

struct FrameTransform {
  FrameId from = FrameId::kSensorIntrinsic;
  FrameId to = FrameId::kWorld;
  Matrix3 rotation = Matrix3::Identity();
  Vec3 translation = Vec3::Zero();  // origin of `from` expressed in `to`
  Vec3 gravity = Vec3(0.0, 0.0, 9.81);  // world frame, m/s^2

  // Throws kNonOrthogonal unless R^T R = I and det R = 1 within 1e-9.
  void Validate() const;

  Vec3 TransformPoint(const Vec3& p) const {
    return rotation * p + translation;
  }
};

// `first` followed by `second`; requires first.to == second.from.
FrameTransform Compose(const FrameTransform& first,
                       const FrameTransform& second);

// Expresses a sample taken in `source` in the world frame:
//   accel' = R * accel - gravity,  gyro' = R * gyro,  mag' = R * mag,
// with R the stacked chain rotation and gravity taken from the link that
// enters the world frame. An empty chain requires source == world and
// leaves the sample untouched.
ImuSample ToWorld(const ImuSample& sample,
                  const std::vector<FrameTransform>& chain,
                  FrameId source = FrameId::kSensorIntrinsic);

// atan2(m_y, m_x) + declination, wrapped into (-pi, pi]. Throws
// kDegenerateField for a purely vertical field.
double HeadingFromMagnetic(const Vec3& mag, double declination);

// Wraps an angle into (-pi, pi].
double WrapAngle(double angle);

}  // namespace fourd

#endif  // FOURD_FRAMES_H_
