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

#include "fourd/frames.h"

#include <cmath>
#include <numbers>
#include <string>

#include "Eigen/LU"
#include "fourd/errors.h"

namespace fourd {
namespace {

constexpr double kOrthogonalityTolerance = 1e-9;

constexpr std::array<FrameId, 5> kAllFrames = {
    FrameId::kSensorIntrinsic, FrameId::kCameraIntrinsic,
    FrameId::kSensorExtrinsic, FrameId::kCameraExtrinsic, FrameId::kWorld};

}  // namespace

std::string_view FrameName(FrameId id) {
  switch (id) {
    case FrameId::kSensorIntrinsic: return "sensor_intrinsic";
    case FrameId::kCameraIntrinsic: return "camera_intrinsic";
    case FrameId::kSensorExtrinsic: return "sensor_extrinsic";
    case FrameId::kCameraExtrinsic: return "camera_extrinsic";
    case FrameId::kWorld: return "world";
  }
  return "invalid";
}

FrameId ParseFrame(std::string_view name) {
  for (FrameId id : kAllFrames) {
    if (FrameName(id) == name) return id;
  }
  throw Error(ErrorCode::kInvalidConfig,
              "unknown frame '" + std::string(name) + "'");
}

void FrameTransform::Validate() const {
  const bool finite = rotation.allFinite() && translation.allFinite() &&
                      gravity.allFinite();
  if (!finite ||
      ((rotation.transpose() * rotation - Matrix3::Identity())
           .cwiseAbs()
           .maxCoeff() > kOrthogonalityTolerance) ||
      std::abs(rotation.determinant() - 1.0) > kOrthogonalityTolerance) {
    throw Error(ErrorCode::kNonOrthogonal,
                "rotation " + std::string(FrameName(from)) + " -> " +
                    std::string(FrameName(to)) +
                    " is not a proper rotation");
  }
}

FrameTransform Compose(const FrameTransform& first,
                       const FrameTransform& second) {
  if (first.to != second.from) {
    throw Error(ErrorCode::kBrokenChain,
                std::string(FrameName(first.to)) + " does not connect to " +
                    std::string(FrameName(second.from)));
  }
  FrameTransform out;
  out.from = first.from;
  out.to = second.to;
  out.rotation = second.rotation * first.rotation;
  out.translation = second.rotation * first.translation + second.translation;
  out.gravity = second.gravity;
  return out;
}

ImuSample ToWorld(const ImuSample& sample,
                  const std::vector<FrameTransform>& chain, FrameId source) {
  if (chain.empty()) {
    if (source != FrameId::kWorld) {
      throw Error(ErrorCode::kBrokenChain,
                  "no transform leads from " +
                      std::string(FrameName(source)) + " to world");
    }
    return sample;
  }
  if (chain.front().from != source) {
    throw Error(ErrorCode::kBrokenChain,
                "chain starts at " + std::string(FrameName(chain.front().from)) +
                    ", sample is in " + std::string(FrameName(source)));
  }
  chain.front().Validate();
  FrameTransform total = chain.front();
  for (size_t i = 1; i < chain.size(); ++i) {
    chain[i].Validate();
    total = Compose(total, chain[i]);
  }
  if (total.to != FrameId::kWorld) {
    throw Error(ErrorCode::kBrokenChain,
                "chain ends at " + std::string(FrameName(total.to)) +
                    " instead of world");
  }
  ImuSample out = sample;
  out.accel = total.rotation * sample.accel - total.gravity;
  out.gyro = total.rotation * sample.gyro;
  out.mag = total.rotation * sample.mag;
  return out;
}

double WrapAngle(double angle) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double wrapped = std::fmod(angle + std::numbers::pi, kTwoPi);
  if (wrapped <= 0.0) wrapped += kTwoPi;
  return wrapped - std::numbers::pi;
}

double HeadingFromMagnetic(const Vec3& mag, double declination) {
  if (!mag.allFinite() || !std::isfinite(declination)) {
    throw Error(ErrorCode::kDomainError, "magnetic field must be finite");
  }
  if (std::hypot(mag.x(), mag.y()) == 0.0) {
    throw Error(ErrorCode::kDegenerateField,
                "horizontal magnetic field component is zero");
  }
  return WrapAngle(std::atan2(mag.y(), mag.x()) + declination);
}

}  // namespace fourd
