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
#include <cstring>
#include <numbers>

#include "fourd/maps_export.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fourd {
namespace {

using testing::ExpectCode;

constexpr double kPi = std::numbers::pi;

std::vector<ImuSample> Stream(int count, double rate, const Vec3& accel,
                              const Vec3& gyro = Vec3::Zero()) {
  std::vector<ImuSample> out;
  for (int k = 0; k < count; ++k) {
    ImuSample s;
    s.t = k / rate;
    s.accel = accel;
    s.gyro = gyro;
    out.push_back(s);
  }
  return out;
}

double RefGamma(double v) { return 1.0 / std::sqrt(1.0 - v * v); }

bool AllFinite(const TrajectoryPoint& p) {
  return std::isfinite(p.t) && p.chi.IsFinite() && p.velocity.allFinite() &&
         std::isfinite(p.speed) && std::isfinite(p.gamma) &&
         std::isfinite(p.tau_gamma) && std::isfinite(p.angles.psi) &&
         std::isfinite(p.primed.psi_p);
}

TEST(RunTest, StaticInputStaysAtOrigin) {
  const auto points = fourd::Run(Stream(1001, 100, Vec3::Zero()), {});
  ASSERT_EQ(points.size(), 1001u);
  for (const TrajectoryPoint& p : points) {
    EXPECT_EQ(p.chi, FourVector{});
    EXPECT_EQ(p.gamma, 1.0);
    EXPECT_EQ(p.angles, EulerAngles{});
    EXPECT_EQ(p.primed, PrimedAngles{});
  }
}

TEST(RunTest, GravityCompensatedRestIsStatic) {
  PipelineConfig config;
  config.frame_chain = {FrameTransform{}};
  const auto points = fourd::Run(Stream(200, 100, Vec3(0, 0, 9.81)), config);
  for (const TrajectoryPoint& p : points) {
    EXPECT_EQ(p.chi, FourVector{});
    EXPECT_EQ(p.gamma, 1.0);
  }
}

// Reference written directly from the model: closed-form kinematics for a
// constant acceleration, gamma from the speed, zeta from the previous
// sample's gamma and the displacement so far.
TEST(RunTest, ConstantAccelerationMatchesReference) {
  const double a = 0.2;
  const auto points = fourd::Run(Stream(101, 100, Vec3(a, 0, 0)), {});
  ASSERT_EQ(points.size(), 101u);
  for (size_t k = 1; k < points.size(); ++k) {
    const double t = k / 100.0;
    const double t_prev = (k - 1) / 100.0;
    const double x = 0.5 * a * t * t;
    const double tau = RefGamma(a * t_prev) - 1.0;
    EXPECT_NEAR(points[k].chi.x, x, 1e-12);
    EXPECT_NEAR(points[k].velocity.x(), a * t, 1e-12);
    EXPECT_NEAR(points[k].gamma, RefGamma(a * t), 1e-12);
    EXPECT_NEAR(points[k].tau_gamma, tau, 1e-12);
    EXPECT_NEAR(points[k].chi.zeta, tau * x, 1e-12);
  }
  EXPECT_NEAR(points.back().chi.x, 0.1, 1e-12);
  EXPECT_NEAR(points.back().gamma, 1.0 / std::sqrt(1.0 - 0.04), 1e-12);
  EXPECT_NEAR(points.back().gamma, 1.02062072616, 1e-11);
}

TEST(RunTest, PureRotation) {
  const auto points = fourd::Run(Stream(201, 100, Vec3::Zero(), Vec3(0, 0, kPi / 2)), {});
  const TrajectoryPoint& last = points.back();
  EXPECT_NEAR(last.angles.psi, kPi, 1e-12);
  EXPECT_EQ(last.chi, FourVector{});
  EXPECT_EQ(last.primed.psi_p, last.angles.psi);
}

TEST(RunTest, IncrementalZetaSumsStepContributions) {
  PipelineConfig config;
  config.zeta_mode = ZetaMode::kIncremental;
  const auto samples = Stream(51, 10, Vec3(0.1, 0.05, 0));
  const auto points = fourd::Run(samples, config);
  double zeta = 0.0;
  for (size_t k = 1; k < points.size(); ++k) {
    const Vec3 step = points[k].chi.spatial() - points[k - 1].chi.spatial();
    zeta += (RefGamma(points[k - 1].speed) - 1.0) * step.norm();
    EXPECT_NEAR(points[k].chi.zeta, zeta, 1e-12);
  }
}

TEST(RunTest, ZetaNonDecreasingForOutboundAcceleration) {
  for (ZetaMode mode : {ZetaMode::kCumulative, ZetaMode::kIncremental}) {
    PipelineConfig config;
    config.zeta_mode = mode;
    config.initial_state.velocity = Vec3(0.05, 0.0, 0.02);
    const auto points = fourd::Run(Stream(300, 100, Vec3(0.1, 0.2, 0.05)), config);
    for (size_t k = 1; k < points.size(); ++k) {
      EXPECT_GE(points[k].chi.zeta, points[k - 1].chi.zeta);
    }
    EXPECT_GT(points.back().chi.zeta, 0.0);
  }
}

TEST(RunTest, TailWindowAddsLookAhead) {
  PipelineConfig config;
  config.tail_window = 0.05;
  const auto samples = Stream(11, 100, Vec3(1, 0, 0));
  const auto with_tail = fourd::Run(samples, config);
  const auto without = fourd::Run(samples, {});
  // Each step adds dt * (integral of 1 over the look-ahead, clipped to the
  // data): dt * min(0.05, t_end - t_n).
  double extra = 0.0;
  for (int k = 1; k <= 10; ++k) {
    extra += 0.01 * std::min(0.05, 0.1 - k / 100.0);
    EXPECT_NEAR(with_tail[k].chi.x - without[k].chi.x, extra, 1e-12);
  }
}

TEST(RunTest, TailUsesGravityFreeAcceleration) {
  PipelineConfig config;
  config.frame_chain = {FrameTransform{}};
  config.tail_window = 0.05;
  const auto points = fourd::Run(Stream(11, 100, Vec3(0, 0, 9.81)), config);
  EXPECT_EQ(points.back().chi, FourVector{});
  config.tail_source = TailSource::kCorrected;
  config.corrections.accel_bias = Vec3(1, 0, 0);
  const auto corrected = fourd::Run(Stream(11, 100, Vec3(1, 0, 9.81)), config);
  EXPECT_EQ(corrected.back().chi, FourVector{});
}

TEST(RunTest, VelocityCorrectionPerStep) {
  PipelineConfig config;
  config.corrections.velocity_correction = Vec3(0.001, 0, 0);
  const auto points = fourd::Run(Stream(11, 10, Vec3::Zero()), config);
  EXPECT_NEAR(points.back().velocity.x(), 0.01, 1e-15);
}

TEST(RunTest, SuperluminalNamesFirstOffendingSample) {
  // v = 0.5 t reaches c = 1 at t = 2.
  const auto samples = Stream(301, 100, Vec3(0.5, 0, 0));
  const RunOutcome outcome = RunUntilFailure(samples, {});
  ASSERT_TRUE(outcome.error.has_value());
  EXPECT_EQ(outcome.error->code(), ErrorCode::kSuperluminalSpeed);
  ASSERT_TRUE(outcome.error->timestamp().has_value());
  EXPECT_NEAR(*outcome.error->timestamp(), 2.0, 1e-12);
  EXPECT_EQ(outcome.points.size(), 200u);
  for (const TrajectoryPoint& p : outcome.points) EXPECT_TRUE(AllFinite(p));
  ExpectCode(ErrorCode::kSuperluminalSpeed, [&] { fourd::Run(samples, {}); });
}

TEST(RunTest, SuperluminalInitialVelocity) {
  PipelineConfig config;
  config.initial_state.velocity = Vec3(2, 0, 0);
  ExpectCode(ErrorCode::kSuperluminalSpeed,
             [&] { fourd::Run(Stream(3, 10, Vec3::Zero()), config); });
}

TEST(RunTest, InputErrors) {
  ExpectCode(ErrorCode::kEmptyDataset, [] { fourd::Run({}, {}); });
  ExpectCode(ErrorCode::kTooFewSamples,
             [] { fourd::Run(Stream(1, 10, Vec3::Zero()), {}); });
  auto samples = Stream(5, 10, Vec3::Zero());
  samples[3].t = samples[2].t;
  ExpectCode(ErrorCode::kNonMonotonicTime, [&] { fourd::Run(samples, {}); });
  samples = Stream(5, 10, Vec3::Zero());
  samples[2].gyro.x() = NAN;
  ExpectCode(ErrorCode::kDomainError, [&] { fourd::Run(samples, {}); });

  PipelineConfig bad;
  bad.relativity.c = -1;
  ExpectCode(ErrorCode::kInvalidConfig,
             [&] { fourd::Run(Stream(5, 10, Vec3::Zero()), bad); });
}

TEST(RunTest, BrokenFrameChainRejectedBeforeIntegration) {
  PipelineConfig config;
  FrameTransform link;
  link.to = FrameId::kSensorExtrinsic;
  config.frame_chain = {link};
  ExpectCode(ErrorCode::kBrokenChain,
             [&] { fourd::Run(Stream(5, 10, Vec3::Zero()), config); });
  ExpectCode(ErrorCode::kBrokenChain, [&] { config.Validate(); });
}

TEST(RunTest, Deterministic) {
  PipelineConfig config;
  config.initial_state.velocity = Vec3(0.1, 0, 0);
  auto samples = Stream(500, 100, Vec3(0.01, -0.02, 0.003), Vec3(0.1, 0.2, 0.3));
  for (size_t i = 0; i < samples.size(); ++i) {
    samples[i].accel.x() = 0.05 * std::sin(0.1 * i);
  }
  const auto a = fourd::Run(samples, config);
  const auto b = fourd::Run(samples, config);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(std::memcmp(&a[i].chi, &b[i].chi, sizeof(FourVector)), 0);
    EXPECT_EQ(a[i].velocity, b[i].velocity);
    EXPECT_EQ(a[i].gamma, b[i].gamma);
    EXPECT_EQ(a[i].primed, b[i].primed);
  }
}

TEST(FourPositionTest, StaticPoint) {
  EXPECT_EQ(FourPosition(TrajectoryPoint{}), FourVector{});
}

TEST(FourPositionTest, ThreeFourFiveStep) {
  // Gamma(0.6) = 1.25 at the first sample, so tau = 0.25; coasting for 25/3 s
  // at (0.36, 0.48, 0) moves (3, 4, 0), giving zeta = 0.25 * 5.
  PipelineConfig config;
  config.initial_state.velocity = Vec3(0.36, 0.48, 0.0);
  std::vector<ImuSample> samples(2);
  samples[1].t = 25.0 / 3.0;
  const auto points = fourd::Run(samples, config);
  const FourVector chi = FourPosition(points[1]);
  EXPECT_NEAR(chi.x, 3.0, 1e-12);
  EXPECT_NEAR(chi.y, 4.0, 1e-12);
  EXPECT_NEAR(chi.zeta, 1.25, 1e-12);
}

TEST(FourPositionTest, InconsistentPoint) {
  TrajectoryPoint p;
  p.velocity = Vec3(0.3, 0, 0);
  p.speed = 0.1;
  ExpectCode(ErrorCode::kInconsistentPoint, [&] { FourPosition(p); });
  p = TrajectoryPoint{};
  p.chi.x = NAN;
  ExpectCode(ErrorCode::kInconsistentPoint, [&] { FourPosition(p); });
}

TEST(FourPositionTest, MatchesExportedCsvRows) {
  PipelineConfig config;
  config.initial_state.velocity = Vec3(0.02, 0.01, 0);
  const auto points = fourd::Run(Stream(50, 20, Vec3(0.03, -0.01, 0.02)), config);
  const auto parsed =
      ParseTrajectoryCsv(ExportTrajectory(points, ExportFormat::kCsv));
  ASSERT_EQ(parsed.size(), points.size());
  for (size_t k = 0; k < points.size(); ++k) {
    const Vec4 a = FourPosition(points[k]).ToVec4();
    const Vec4 b = parsed[k].chi.ToVec4();
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-9) << "row " << k;
  }
}

TEST(PointPoseTest, OriginMapsToFourPosition) {
  PipelineConfig config;
  const auto points =
      fourd::Run(Stream(30, 10, Vec3(0.01, 0.02, 0), Vec3(0.1, 0, 0.3)), config);
  for (const TrajectoryPoint& p : points) {
    const Pose4D pose = PointPose(p);
    EXPECT_EQ(ApplyPose(pose, {}), p.chi);
    EXPECT_EQ(pose.angles(), p.angles);
  }
}

}  // namespace
}  // namespace fourd
