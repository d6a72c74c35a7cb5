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

#ifndef FOURD_STRAPDOWN_H_
#define FOURD_STRAPDOWN_H_

#include <span>
#include <vector>

#include "fourd/core4d.h"

namespace fourd {

struct ImuSample {
  double t = 0.0;  // seconds
  Vec3 accel = Vec3::Zero();  // m/s^2
  Vec3 gyro = Vec3::Zero();   // rad/s
  Vec3 mag = Vec3::Zero();    // microtesla

  bool IsFinite() const;
};

struct TimedVector {
  double t = 0.0;
  Vec3 value = Vec3::Zero();
};

// a_cor = a_world - accel_bias; velocity_correction is added once per
// integration window.
struct CorrectionTerms {
  Vec3 accel_bias = Vec3::Zero();
  Vec3 velocity_correction = Vec3::Zero();
};

struct KinematicState {
  double t = 0.0;
  Vec3 velocity = Vec3::Zero();
  Vec3 translation = Vec3::Zero();
  EulerAngles angles;
};

Vec3 CorrectedAcceleration(const Vec3& world_accel,
                           const CorrectionTerms& corrections);

// Cumulative trapezoidal integral of a_cor from the first sample, one entry
// per input sample. The velocity correction is added to the last entry only.
// Throws kTooFewSamples (< 2 samples) or kNonMonotonicTime.
std::vector<TimedVector> IntegrateVelocity(
    std::span<const TimedVector> accel, const CorrectionTerms& corrections);

// Trapezoidal integral of the piecewise-linear interpolant of `samples` over
// [from, from + window], clipped to the sampled time range.
Vec3 TailIntegral(std::span<const TimedVector> samples, double from,
                  double window);

// Displacement over the window [t_0, t_n] spanned by `accel` (a_cor),
// starting from rest:
//
//   dT = double integral of a_cor
//        + dt * (integral of a_lin over [t_n, t_n + tail_window])
//        + dt / 2 * dv_cor,    dt = t_n - t_0.
//
// `linear` supplies a_lin for the tail term and may be empty when
// tail_window is 0.
Vec3 IntegrateTranslation(std::span<const TimedVector> accel,
                          std::span<const TimedVector> linear,
                          const CorrectionTerms& corrections,
                          double tail_window);

// Trapezoidal integral of the angular rate, mapped omega_z -> psi,
// omega_y -> theta, omega_x -> phi.
EulerAngles IntegrateAngle(std::span<const TimedVector> rate);

// One trapezoidal update over [prev.t, sample.t]. Both samples must already
// be expressed in the world frame with gravity removed.
KinematicState Step(const KinematicState& state, const ImuSample& sample,
                    const ImuSample& prev, const CorrectionTerms& corrections);

}  // namespace fourd

#endif  // FOURD_STRAPDOWN_H_
