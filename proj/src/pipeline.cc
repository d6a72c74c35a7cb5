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

#include "fourd/pipeline.h"

#include <cmath>
#include <string>

namespace fourd {
namespace {

constexpr double kSpeedConsistencyTolerance = 1e-9;

bool IsFinite(const TrajectoryPoint& p) {
  return std::isfinite(p.t) && p.chi.IsFinite() && p.velocity.allFinite() &&
         std::isfinite(p.speed) && std::isfinite(p.gamma) &&
         std::isfinite(p.tau_gamma) && std::isfinite(p.angles.psi) &&
         std::isfinite(p.angles.theta) && std::isfinite(p.angles.phi) &&
         std::isfinite(p.primed.psi_p) && std::isfinite(p.primed.theta_p) &&
         std::isfinite(p.primed.phi_p);
}

// Lorentz factor of `velocity`, with the failing timestamp attached.
double GammaAt(const Vec3& velocity, double t, const RelativityConfig& cfg) {
  try {
    return LorentzFactor(velocity.norm(), cfg);
  } catch (const Error& e) {
    throw Error(e.code(),
                "speed " + std::to_string(velocity.norm()) +
                    " m/s reaches c = " + std::to_string(cfg.c) + " m/s",
                std::nullopt, t);
  }
}

TrajectoryPoint MakePoint(const KinematicState& state, double zeta,
                          double tau_gamma, const RelativityConfig& cfg) {
  TrajectoryPoint p;
  p.t = state.t;
  p.chi = {zeta, state.translation.x(), state.translation.y(),
           state.translation.z()};
  p.velocity = state.velocity;
  p.speed = state.velocity.norm();
  p.gamma = GammaAt(state.velocity, state.t, cfg);
  p.tau_gamma = tau_gamma;
  p.angles = state.angles;
  p.primed = ToPrimedAngles(state.angles, tau_gamma);
  if (!IsFinite(p)) {
    throw Error(ErrorCode::kDomainError, "non-finite trajectory state",
                std::nullopt, state.t);
  }
  return p;
}

void CheckSamples(std::span<const ImuSample> samples) {
  if (samples.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "dataset contains no samples");
  }
  if (samples.size() < 2) {
    throw Error(ErrorCode::kTooFewSamples,
                "integration needs at least 2 samples");
  }
  for (size_t i = 0; i < samples.size(); ++i) {
    if (!samples[i].IsFinite()) {
      throw Error(ErrorCode::kDomainError,
                  "sample " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(samples[i].t > samples[i - 1].t)) {
      throw Error(ErrorCode::kNonMonotonicTime,
                  "sample " + std::to_string(i) + " does not advance time",
                  std::nullopt, samples[i].t);
    }
  }
}

}  // namespace

void PipelineConfig::Validate() const {
  relativity.Validate();
  ValidateRotationOrder(rotation_order);
  if (!frame_chain.empty()) ToWorld(ImuSample{}, frame_chain, sample_frame);
  if (!(tail_window >= 0.0) || !std::isfinite(tail_window)) {
    throw Error(ErrorCode::kInvalidConfig,
                "tail_window must be finite and >= 0");
  }
  const bool finite =
      corrections.accel_bias.allFinite() &&
      corrections.velocity_correction.allFinite() &&
      initial_state.velocity.allFinite() &&
      initial_state.translation.allFinite() &&
      std::isfinite(initial_state.angles.psi) &&
      std::isfinite(initial_state.angles.theta) &&
      std::isfinite(initial_state.angles.phi);
  if (!finite) {
    throw Error(ErrorCode::kInvalidConfig, "configuration values must be finite");
  }
}

RunOutcome RunUntilFailure(std::span<const ImuSample> samples,
                           const PipelineConfig& config) {
  RunOutcome outcome;
  try {
    config.Validate();
    CheckSamples(samples);

    std::vector<ImuSample> world(samples.begin(), samples.end());
    if (!config.frame_chain.empty()) {
      for (ImuSample& s : world) {
        s = ToWorld(s, config.frame_chain, config.sample_frame);
      }
    }
    std::vector<TimedVector> tail;
    if (config.tail_window > 0.0) {
      tail.reserve(samples.size());
      for (size_t i = 0; i < samples.size(); ++i) {
        tail.push_back(
            {samples[i].t, config.tail_source == TailSource::kRaw
                               ? world[i].accel
                               : CorrectedAcceleration(world[i].accel,
                                                       config.corrections)});
      }
    }

    KinematicState state = config.initial_state;
    state.t = samples[0].t;
    const Vec3 origin = state.translation;
    const RelativityConfig& rel = config.relativity;

    double tau = LorentzScale(GammaAt(state.velocity, state.t, rel));
    double zeta = 0.0;
    outcome.points.push_back(MakePoint(state, zeta, tau, rel));

    for (size_t n = 1; n < samples.size(); ++n) {
      // Boost strength lags one step behind: it comes from the velocity at
      // the previous sample.
      tau = LorentzScale(outcome.points.back().gamma);
      const Vec3 previous = state.translation;
      state = Step(state, world[n], world[n - 1], config.corrections);
      if (!tail.empty()) {
        const double dt = samples[n].t - samples[n - 1].t;
        state.translation +=
            dt * TailIntegral(tail, samples[n].t, config.tail_window);
      }
      if (config.zeta_mode == ZetaMode::kCumulative) {
        zeta = TemporalTranslation(state.translation - origin, tau);
      } else {
        zeta += TemporalTranslation(state.translation - previous, tau);
      }
      outcome.points.push_back(MakePoint(state, zeta, tau, rel));
    }
  } catch (const Error& e) {
    outcome.error = e;
  }
  return outcome;
}

std::vector<TrajectoryPoint> Run(std::span<const ImuSample> samples,
                                 const PipelineConfig& config) {
  RunOutcome outcome = RunUntilFailure(samples, config);
  if (outcome.error) throw *outcome.error;
  return std::move(outcome.points);
}

FourVector FourPosition(const TrajectoryPoint& point) {
  if (!IsFinite(point)) {
    throw Error(ErrorCode::kInconsistentPoint, "trajectory point is not finite",
                std::nullopt, point.t);
  }
  const double speed = point.velocity.norm();
  if (std::abs(speed - point.speed) >
          kSpeedConsistencyTolerance * std::max(1.0, speed) ||
      point.gamma < 1.0 || point.tau_gamma < 0.0) {
    throw Error(ErrorCode::kInconsistentPoint,
                "speed, gamma and velocity disagree", std::nullopt, point.t);
  }
  return point.chi;
}

Pose4D PointPose(const TrajectoryPoint& point, const RotationOrder& order) {
  return Pose4D(point.angles, point.primed, FourPosition(point), order);
}

}  // namespace fourd
