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

#include "fourd/sim_oracle.h"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "fourd/errors.h"

namespace fourd::sim {
namespace {

constexpr int kFineStepsPerSample = 10;
constexpr double kMaxSamples = 5e7;
constexpr double kTimestampTolerance = 1e-9;

struct Kinematics {
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
  Vec3 accel = Vec3::Zero();
  double yaw = 0.0;
  double yaw_rate = 0.0;
};

Kinematics Evaluate(const MotionProfile& p, double t) {
  Kinematics k;
  k.yaw_rate = p.angular_rate;
  switch (p.kind) {
    case MotionKind::kRest:
      break;
    case MotionKind::kConstantAccel:
      k.accel = p.accel;
      k.velocity = p.accel * t;
      k.position = 0.5 * p.accel * t * t;
      break;
    case MotionKind::kLinearRamp:
      k.accel = p.jerk * t;
      k.velocity = 0.5 * p.jerk * t * t;
      k.position = p.jerk * t * t * t / 6.0;
      break;
    case MotionKind::kSinusoid: {
      const double w = 2.0 * std::numbers::pi / p.period;
      k.accel = p.accel * std::sin(w * t);
      k.velocity = p.accel / w * (1.0 - std::cos(w * t));
      k.position = p.accel / w * t - p.accel / (w * w) * std::sin(w * t);
      break;
    }
    case MotionKind::kCircle: {
      const double w = 2.0 * std::numbers::pi / p.period;
      const double r = p.radius;
      const double s = std::sin(w * t);
      const double c = std::cos(w * t);
      k.position = Vec3(r * s, r * (1.0 - c), 0.0);
      k.velocity = Vec3(r * w * c, r * w * s, 0.0);
      k.accel = Vec3(-r * w * w * s, r * w * w * c, 0.0);
      k.yaw_rate = w;
      break;
    }
  }
  k.yaw = k.yaw_rate * t;
  return k;
}

double SampleTime(const MotionProfile& p, long long k) {
  return static_cast<double>(k) / p.rate;
}

// Reference Lorentz factor, written out independently of core4d.
double ReferenceGamma(const Vec3& velocity, const RelativityConfig& rel,
                      double t) {
  const double beta = velocity.norm() / rel.c;
  if (beta >= 1.0 - rel.epsilon_speed) {
    throw Error(ErrorCode::kInvalidProfile,
                "profile speed reaches c; no ground truth exists",
                std::nullopt, t);
  }
  return 1.0 / std::sqrt(1.0 - beta * beta);
}

Vec3 BodyField(const MotionProfile& p, double yaw) {
  const double c = std::cos(yaw);
  const double s = std::sin(yaw);
  const Vec3& b = p.magnetic_field;
  return Vec3(c * b.x() + s * b.y(), -s * b.x() + c * b.y(), b.z());
}

}  // namespace

std::string_view MotionKindName(MotionKind kind) {
  switch (kind) {
    case MotionKind::kRest: return "rest";
    case MotionKind::kConstantAccel: return "constant_accel";
    case MotionKind::kLinearRamp: return "linear_ramp";
    case MotionKind::kCircle: return "circle";
    case MotionKind::kSinusoid: return "sinusoid";
  }
  return "invalid";
}

MotionKind ParseMotionKind(std::string_view name) {
  for (MotionKind k :
       {MotionKind::kRest, MotionKind::kConstantAccel, MotionKind::kLinearRamp,
        MotionKind::kCircle, MotionKind::kSinusoid}) {
    if (MotionKindName(k) == name) return k;
  }
  throw Error(ErrorCode::kInvalidProfile,
              "unknown motion kind '" + std::string(name) + "'");
}

void MotionProfile::Validate() const {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::kInvalidProfile, why);
  };
  if (!(rate > 0.0) || !std::isfinite(rate)) fail("rate must be > 0");
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    fail("duration must be > 0");
  }
  if (duration * rate > kMaxSamples) fail("profile has too many samples");
  if (SampleCount() < 2) fail("profile must span at least one sample interval");
  if ((kind == MotionKind::kCircle || kind == MotionKind::kSinusoid) &&
      (!(period > 0.0) || !std::isfinite(period))) {
    fail("period must be > 0");
  }
  if (kind == MotionKind::kCircle && (!(radius > 0.0) || !std::isfinite(radius))) {
    fail("radius must be > 0");
  }
  if (!accel.allFinite() || !jerk.allFinite() || !magnetic_field.allFinite() ||
      !std::isfinite(angular_rate)) {
    fail("profile parameters must be finite");
  }
  for (double sigma : {noise.accel, noise.gyro, noise.mag}) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) fail("noise sigma must be >= 0");
  }
  try {
    relativity.Validate();
  } catch (const Error& e) {
    fail(e.what());
  }
}

int MotionProfile::SampleCount() const {
  return static_cast<int>(std::llround(duration * rate)) + 1;
}

std::vector<ImuSample> GenerateSamples(const MotionProfile& profile) {
  profile.Validate();
  const int count = profile.SampleCount();
  std::vector<ImuSample> samples;
  samples.reserve(count);
  for (int k = 0; k < count; ++k) {
    const double t = SampleTime(profile, k);
    const Kinematics kin = Evaluate(profile, t);
    ImuSample s;
    s.t = t;
    s.accel = kin.accel;
    s.gyro = Vec3(0.0, 0.0, kin.yaw_rate);
    s.mag = BodyField(profile, kin.yaw);
    samples.push_back(s);
  }

  const NoiseSigma& n = profile.noise;
  if (n.accel > 0.0 || n.gyro > 0.0 || n.mag > 0.0) {
    std::mt19937_64 engine(profile.seed);
    std::normal_distribution<double> unit(0.0, 1.0);
    for (ImuSample& s : samples) {
      for (int i = 0; i < 3; ++i) s.accel[i] += n.accel * unit(engine);
      for (int i = 0; i < 3; ++i) s.gyro[i] += n.gyro * unit(engine);
      for (int i = 0; i < 3; ++i) s.mag[i] += n.mag * unit(engine);
    }
  }
  return samples;
}

Dataset Generate(const MotionProfile& profile) {
  Dataset data;
  data.samples = GenerateSamples(profile);
  const RelativityConfig& rel = profile.relativity;
  const Vec3 start = Evaluate(profile, 0.0).position;

  // Temporal quantities come from an explicit recurrence on a grid
  // kFineStepsPerSample times finer than the samples: the boost strength at
  // each fine step uses the velocity one fine step earlier.
  const long long fine_steps =
      static_cast<long long>(data.samples.size() - 1) * kFineStepsPerSample;
  const double fine_rate = profile.rate * kFineStepsPerSample;
  double prev_gamma = ReferenceGamma(Evaluate(profile, 0.0).velocity, rel, 0.0);
  data.truth.reserve(data.samples.size());
  for (long long j = 0; j <= fine_steps; ++j) {
    const double t = static_cast<double>(j) / fine_rate;
    const Kinematics kin = Evaluate(profile, t);
    const double gamma = ReferenceGamma(kin.velocity, rel, t);
    const double tau = prev_gamma - 1.0;
    prev_gamma = gamma;
    if (j % kFineStepsPerSample != 0) continue;

    const double sample_t = data.samples[j / kFineStepsPerSample].t;
    const Kinematics at = Evaluate(profile, sample_t);
    TrajectoryPoint p;
    p.t = sample_t;
    p.chi = {tau * (at.position - start).norm(), at.position.x(),
             at.position.y(), at.position.z()};
    p.velocity = at.velocity;
    p.speed = at.velocity.norm();
    p.gamma = ReferenceGamma(at.velocity, rel, sample_t);
    p.tau_gamma = tau;
    p.angles = {at.yaw, 0.0, 0.0};
    p.primed = {at.yaw * (1.0 + tau), 0.0, 0.0};
    data.truth.push_back(p);
  }
  return data;
}

KinematicState InitialState(const MotionProfile& profile) {
  const Kinematics kin = Evaluate(profile, 0.0);
  KinematicState state;
  state.velocity = kin.velocity;
  state.translation = kin.position;
  state.angles = {kin.yaw, 0.0, 0.0};
  return state;
}

DriftMetrics DriftReport(std::span<const TrajectoryPoint> estimated,
                         std::span<const TrajectoryPoint> truth) {
  if (estimated.size() != truth.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "trajectories have " + std::to_string(estimated.size()) +
                    " and " + std::to_string(truth.size()) + " points");
  }
  DriftMetrics m;
  if (estimated.empty()) return m;
  double sum_sq = 0.0;
  for (size_t i = 0; i < estimated.size(); ++i) {
    if (std::abs(estimated[i].t - truth[i].t) > kTimestampTolerance) {
      throw Error(ErrorCode::kLengthMismatch,
                  "timestamps differ at point " + std::to_string(i),
                  std::nullopt, estimated[i].t);
    }
    const double e =
        (estimated[i].chi.spatial() - truth[i].chi.spatial()).norm();
    m.max_position_error = std::max(m.max_position_error, e);
    sum_sq += e * e;
    m.final_position_error = e;
  }
  m.rms_position_error = std::sqrt(sum_sq / estimated.size());
  m.heading_error =
      std::abs(estimated.back().angles.psi - truth.back().angles.psi);
  return m;
}

}  // namespace fourd::sim
