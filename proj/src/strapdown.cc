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

#include "fourd/strapdown.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "fourd/errors.h"

namespace fourd {
namespace {

void CheckWindow(std::span<const TimedVector> samples) {
  if (samples.size() < 2) {
    throw Error(ErrorCode::kTooFewSamples,
                "integration needs at least 2 samples, got " +
                    std::to_string(samples.size()));
  }
  for (size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].t > samples[i - 1].t)) {
      throw Error(ErrorCode::kNonMonotonicTime,
                  "sample " + std::to_string(i) + " does not advance time",
                  std::nullopt, samples[i].t);
    }
  }
}

Vec3 TrapezoidIncrement(const Vec3& a, const Vec3& b, double dt) {
  return 0.5 * (a + b) * dt;
}

Vec3 Interpolate(const TimedVector& a, const TimedVector& b, double t) {
  const double w = (t - a.t) / (b.t - a.t);
  return (1.0 - w) * a.value + w * b.value;
}

}  // namespace

bool ImuSample::IsFinite() const {
  return std::isfinite(t) && accel.allFinite() && gyro.allFinite() &&
         mag.allFinite();
}

Vec3 CorrectedAcceleration(const Vec3& world_accel,
                           const CorrectionTerms& corrections) {
  return world_accel - corrections.accel_bias;
}

std::vector<TimedVector> IntegrateVelocity(
    std::span<const TimedVector> accel, const CorrectionTerms& corrections) {
  CheckWindow(accel);
  std::vector<TimedVector> out;
  out.reserve(accel.size());
  out.push_back({accel[0].t, Vec3::Zero()});
  for (size_t i = 1; i < accel.size(); ++i) {
    const double dt = accel[i].t - accel[i - 1].t;
    out.push_back(
        {accel[i].t, out.back().value + TrapezoidIncrement(accel[i - 1].value,
                                                           accel[i].value, dt)});
  }
  out.back().value += corrections.velocity_correction;
  return out;
}

Vec3 TailIntegral(std::span<const TimedVector> samples, double from,
                  double window) {
  if (!(window >= 0.0) || !std::isfinite(window)) {
    throw Error(ErrorCode::kDomainError, "tail window must be finite and >= 0");
  }
  Vec3 sum = Vec3::Zero();
  if (window == 0.0 || samples.size() < 2) return sum;
  const double to = from + window;
  for (size_t i = 1; i < samples.size(); ++i) {
    const TimedVector& a = samples[i - 1];
    const TimedVector& b = samples[i];
    const double lo = std::max(a.t, from);
    const double hi = std::min(b.t, to);
    if (hi <= lo) continue;
    sum += TrapezoidIncrement(Interpolate(a, b, lo), Interpolate(a, b, hi),
                              hi - lo);
  }
  return sum;
}

Vec3 IntegrateTranslation(std::span<const TimedVector> accel,
                          std::span<const TimedVector> linear,
                          const CorrectionTerms& corrections,
                          double tail_window) {
  CheckWindow(accel);
  Vec3 velocity = Vec3::Zero();
  Vec3 displacement = Vec3::Zero();
  for (size_t i = 1; i < accel.size(); ++i) {
    const double dt = accel[i].t - accel[i - 1].t;
    const Vec3 next =
        velocity + TrapezoidIncrement(accel[i - 1].value, accel[i].value, dt);
    displacement += TrapezoidIncrement(velocity, next, dt);
    velocity = next;
  }
  const double span = accel.back().t - accel.front().t;
  displacement += span * TailIntegral(linear, accel.back().t, tail_window);
  displacement += 0.5 * span * corrections.velocity_correction;
  return displacement;
}

EulerAngles IntegrateAngle(std::span<const TimedVector> rate) {
  CheckWindow(rate);
  Vec3 sum = Vec3::Zero();
  for (size_t i = 1; i < rate.size(); ++i) {
    sum += TrapezoidIncrement(rate[i - 1].value, rate[i].value,
                              rate[i].t - rate[i - 1].t);
  }
  return {sum.z(), sum.y(), sum.x()};
}

KinematicState Step(const KinematicState& state, const ImuSample& sample,
                    const ImuSample& prev, const CorrectionTerms& corrections) {
  if (!(sample.t > prev.t)) {
    throw Error(ErrorCode::kNonMonotonicTime, "sample does not advance time",
                std::nullopt, sample.t);
  }
  const double dt = sample.t - prev.t;
  const Vec3 a_prev = CorrectedAcceleration(prev.accel, corrections);
  const Vec3 a_curr = CorrectedAcceleration(sample.accel, corrections);
  const Vec3 integrated =
      state.velocity + TrapezoidIncrement(a_prev, a_curr, dt);
  const Vec3 turn = TrapezoidIncrement(prev.gyro, sample.gyro, dt);

  KinematicState next;
  next.t = sample.t;
  next.velocity = integrated + corrections.velocity_correction;
  next.translation = state.translation +
                     TrapezoidIncrement(state.velocity, integrated, dt) +
                     0.5 * dt * corrections.velocity_correction;
  next.angles = {state.angles.psi + turn.z(), state.angles.theta + turn.y(),
                 state.angles.phi + turn.x()};
  return next;
}

}  // namespace fourd
