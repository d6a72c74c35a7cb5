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

#include <filesystem>
#include <random>
#include <sstream>

#include "fourd/cli.h"
#include "fourd/config.h"
#include "fourd/dataset_io.h"
#include "fourd/maps_export.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fourd {
namespace {

namespace fs = std::filesystem;
using testing::ExpectCode;

constexpr char kHeader[] = "t,ax,ay,az,wx,wy,wz,bx,by,bz\n";

TEST(ParseDatasetTest, HeaderOnlyIsEmpty) {
  EXPECT_TRUE(ParseDataset(kHeader).empty());
  EXPECT_TRUE(ParseDataset("# recorded on bench\n\nt,ax,ay,az,wx,wy,wz,bx,by,bz\r\n")
                  .empty());
}

TEST(ParseDatasetTest, SingleRow) {
  const auto samples =
      ParseDataset(std::string(kHeader) + "0.0,0,0,9.81,0,0,0,20,0,-40\n");
  ASSERT_EQ(samples.size(), 1u);
  EXPECT_EQ(samples[0].t, 0.0);
  EXPECT_EQ(samples[0].accel, Vec3(0, 0, 9.81));
  EXPECT_EQ(samples[0].gyro, Vec3::Zero());
  EXPECT_EQ(samples[0].mag, Vec3(20, 0, -40));
}

TEST(ParseDatasetTest, TimeRegressionReportsLine) {
  const std::string text = std::string(kHeader) +
                           "0.0,0,0,0,0,0,0,0,0,0\n"
                           "0.2,0,0,0,0,0,0,0,0,0\n"
                           "0.1,0,0,0,0,0,0,0,0,0\n";
  try {
    ParseDataset(text);
    FAIL() << "expected NonMonotonicTime";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonMonotonicTime);
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(ParseDatasetTest, MalformedInputs) {
  ExpectCode(ErrorCode::kParseError, [] { ParseDataset(""); });
  ExpectCode(ErrorCode::kParseError,
             [] { ParseDataset("t,ax,ay,az,wx,wy,wz,bx,by,bq\n"); });
  ExpectCode(ErrorCode::kColumnCountMismatch,
             [] { ParseDataset(std::string(kHeader) + "0,1,2\n"); });
  ExpectCode(ErrorCode::kParseError, [] {
    ParseDataset(std::string(kHeader) + "0,0,0,abc,0,0,0,0,0,0\n");
  });
  ExpectCode(ErrorCode::kParseError, [] {
    ParseDataset(std::string(kHeader) + "0,0,0,nan,0,0,0,0,0,0\n");
  });
}

TEST(ParseDatasetTest, SerializeRoundTripProperty) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> value(-1e3, 1e3);
  std::uniform_real_distribution<double> gap(1e-6, 0.5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ImuSample> samples(1 + trial);
    double t = value(rng);
    for (ImuSample& s : samples) {
      s.t = t;
      t += gap(rng);
      s.accel = Vec3(value(rng), value(rng), value(rng));
      s.gyro = Vec3(value(rng), value(rng), value(rng)) * 1e-3;
      s.mag = Vec3(value(rng), value(rng), value(rng)) * 1e-7;
    }
    const auto parsed = ParseDataset(SerializeDataset(samples));
    ASSERT_EQ(parsed.size(), samples.size());
    for (size_t i = 0; i < samples.size(); ++i) {
      EXPECT_EQ(parsed[i].t, samples[i].t);
      EXPECT_EQ(parsed[i].accel, samples[i].accel);
      EXPECT_EQ(parsed[i].gyro, samples[i].gyro);
      EXPECT_EQ(parsed[i].mag, samples[i].mag);
    }
  }
}

// Random mutations of a valid file either parse or raise a typed error.
TEST(ParseDatasetTest, FuzzedInputNeverCrashes) {
  const std::string base = std::string(kHeader) +
                           "0,0.1,0.2,9.81,0,0,0.01,20,0,-40\n"
                           "0.01,0.1,0.2,9.81,0,0,0.01,20,0,-40\n"
                           "0.02,0.1,0.2,9.81,0,0,0.01,20,0,-40\n";
  const std::string alphabet = "0123456789.,-+eE \n\r#xn";
  std::mt19937_64 rng(1234);
  int typed = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text = base;
    const int edits = 1 + static_cast<int>(rng() % 4);
    for (int e = 0; e < edits; ++e) {
      const size_t pos = rng() % (text.size() + 1);
      const char c = alphabet[rng() % alphabet.size()];
      switch (rng() % 3) {
        case 0: text.insert(text.begin() + pos, c); break;
        case 1: if (pos < text.size()) text.erase(pos, 1); break;
        default: if (pos < text.size()) text[pos] = c; break;
      }
    }
    try {
      ParseDataset(text);
    } catch (const Error&) {
      ++typed;
    }
  }
  EXPECT_GT(typed, 0);
}

TEST(FileTest, ReadMissingFileIsIoError) {
  ExpectCode(ErrorCode::kIoError,
             [] { ReadFile("/nonexistent/definitely/not/here.csv"); });
  ExpectCode(ErrorCode::kIoError,
             [] { WriteFileAtomic("/nonexistent/dir/out.csv", "x"); });
}

TEST(ParseConfigTest, EmptyGivesDefaults) {
  const ToolkitConfig config = ParseConfig("# nothing here\n\n");
  EXPECT_EQ(config.pipeline.relativity.c, 1.0);
  EXPECT_EQ(config.pipeline.relativity.epsilon_speed, 1e-12);
  EXPECT_TRUE(config.pipeline.frame_chain.empty());
  EXPECT_EQ(config.pipeline.zeta_mode, ZetaMode::kCumulative);
  EXPECT_EQ(config.pipeline.rotation_order, kDefaultRotationOrder);
}

TEST(ParseConfigTest, FullConfig) {
  const ToolkitConfig config = ParseConfig(
      "c = 2.5\n"
      "epsilon_speed = 1e-9\n"
      "accel_bias = 0.01, 0, -0.02\n"
      "velocity_correction = 0, 0.001, 0\n"
      "rotation_order = zeta_x, zeta_y, zeta_z, yz, xz, xy\n"
      "frame.0.from = sensor_intrinsic\n"
      "frame.0.to = sensor_extrinsic\n"
      "frame.0.rotation = 0,-1,0, 1,0,0, 0,0,1\n"
      "frame.1.from = sensor_extrinsic\n"
      "frame.1.to = world\n"
      "frame.1.translation = 1, 2, 3\n"
      "gravity = 0, 0, 9.8\n"
      "tail_window = 0.02\n"
      "tail_source = corrected\n"
      "zeta_mode = incremental\n"
      "initial.velocity = 0.1, 0, 0\n"
      "grid.cell_size = 0.5\n"
      "grid.auto_fit = false\n"
      "grid.width = 10\n"
      "grid.height = 20\n"
      "grid.projection = x_zeta\n"
      "ramp.channel = b\n"
      "ramp.stop.0 = 0, 0,0,10\n"
      "ramp.stop.1 = 2, 0,0,250\n"
      "arrow_scale = 3\n"
      "profile.kind = circle\n"
      "profile.radius = 2\n"
      "profile.rate = 500\n"
      "profile.noise.accel = 0.001\n"
      "seed = 77\n");
  const PipelineConfig& p = config.pipeline;
  EXPECT_EQ(p.relativity.c, 2.5);
  EXPECT_EQ(p.relativity.epsilon_speed, 1e-9);
  EXPECT_EQ(p.corrections.accel_bias, Vec3(0.01, 0, -0.02));
  EXPECT_EQ(p.rotation_order[0], Plane::kZetaX);
  ASSERT_EQ(p.frame_chain.size(), 2u);
  EXPECT_EQ(p.frame_chain[0].rotation(0, 1), -1.0);
  EXPECT_EQ(p.frame_chain[1].translation, Vec3(1, 2, 3));
  EXPECT_EQ(p.frame_chain[1].gravity, Vec3(0, 0, 9.8));
  EXPECT_EQ(p.tail_window, 0.02);
  EXPECT_EQ(p.tail_source, TailSource::kCorrected);
  EXPECT_EQ(p.zeta_mode, ZetaMode::kIncremental);
  EXPECT_EQ(p.initial_state.velocity, Vec3(0.1, 0, 0));
  EXPECT_FALSE(config.grid.auto_fit);
  EXPECT_EQ(config.grid.height, 20);
  EXPECT_EQ(config.grid.projection, MapProjection::kXZeta);
  EXPECT_EQ(config.ramp.monotone_channel(), 2);
  EXPECT_EQ(config.ramp.stops().back().color[2], 250);
  EXPECT_EQ(config.export_options.arrow_scale, 3.0);
  EXPECT_EQ(config.profile.kind, sim::MotionKind::kCircle);
  EXPECT_EQ(config.profile.radius, 2.0);
  EXPECT_EQ(config.profile.noise.accel, 0.001);
  EXPECT_EQ(config.profile.seed, 77u);
  EXPECT_EQ(config.profile.relativity.c, 2.5);
}

TEST(ParseConfigTest, Errors) {
  auto line_of = [](const std::string& text) {
    try {
      ParseConfig(text);
    } catch (const Error& e) {
      return e.line().value_or(-1);
    }
    return 0;
  };
  ExpectCode(ErrorCode::kInvalidConfig, [] { ParseConfig("speed_of_light = 3\n"); });
  EXPECT_EQ(line_of("c = 1\n\nbogus = 2\n"), 3);
  ExpectCode(ErrorCode::kInvalidConfig, [] { ParseConfig("c = 1\nc = 2\n"); });
  EXPECT_EQ(line_of("c = 1\nc = 2\n"), 2);
  ExpectCode(ErrorCode::kParseError, [] { ParseConfig("just words\n"); });
  ExpectCode(ErrorCode::kInvalidConfig, [] { ParseConfig("c = -1\n"); });
  ExpectCode(ErrorCode::kInvalidConfig, [] { ParseConfig("c = fast\n"); });
  ExpectCode(ErrorCode::kInvalidConfig,
             [] { ParseConfig("rotation_order = xy,xy,yz,zeta_x,zeta_y,zeta_z\n"); });
  ExpectCode(ErrorCode::kInvalidConfig, [] {
    ParseConfig("frame.0.from = sensor_intrinsic\nframe.0.to = world\n"
                "frame.0.rotation = 1,0,0, 0,2,0, 0,0,1\n");
  });
  ExpectCode(ErrorCode::kInvalidConfig, [] {
    ParseConfig("frame.0.from = sensor_intrinsic\nframe.0.to = camera_intrinsic\n"
                "frame.1.from = sensor_extrinsic\nframe.1.to = world\n");
  });
  ExpectCode(ErrorCode::kInvalidConfig, [] { ParseConfig("profile.rate = 0\n"); });
  ExpectCode(ErrorCode::kInvalidConfig,
             [] { ParseConfig("ramp.stop.0 = 0, 0,0,0\n"); });
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fourd_cli_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  int Cli(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return RunCli(args, out_, err_);
  }

  void Write(const std::string& name, const std::string& content) {
    WriteFileAtomic(Path(name), content);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, Version) {
  EXPECT_EQ(Cli({"version"}), 0);
  EXPECT_EQ(out_.str(), std::string("fourd ") + kVersion + "\n");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}), kExitValidation);
  EXPECT_EQ(Cli({"teleport"}), kExitValidation);
  EXPECT_EQ(Cli({"integrate", "--out", "-"}), kExitValidation);
  EXPECT_EQ(Cli({"--help"}), kExitOk);
}

TEST_F(CliTest, MissingInputIsIoError) {
  EXPECT_EQ(Cli({"integrate", "--input", Path("absent.csv"), "--out", "-"}),
            kExitIo);
  EXPECT_NE(err_.str().find("IoError"), std::string::npos);
}

TEST_F(CliTest, SimulateIsByteIdentical) {
  Write("p.cfg",
        "profile.kind = sinusoid\nprofile.accel = 0.2,0,0\nprofile.period = 2\n"
        "profile.noise.accel = 0.01\nseed = 3\n");
  ASSERT_EQ(Cli({"simulate", "--profile", Path("p.cfg"), "--out", Path("a.csv"),
                 "--truth", Path("ta.csv")}),
            0);
  ASSERT_EQ(Cli({"simulate", "--profile", Path("p.cfg"), "--out", Path("b.csv"),
                 "--truth", Path("tb.csv")}),
            0);
  EXPECT_EQ(ReadFile(Path("a.csv")), ReadFile(Path("b.csv")));
  EXPECT_EQ(ReadFile(Path("ta.csv")), ReadFile(Path("tb.csv")));
  EXPECT_EQ(ParseDataset(ReadFile(Path("a.csv"))).size(), 101u);
}

TEST_F(CliTest, IntegrateMapExportChain) {
  Write("p.cfg", "profile.kind = circle\nprofile.duration = 2\n");
  ASSERT_EQ(Cli({"simulate", "--profile", Path("p.cfg"), "--out", Path("d.csv")}), 0);
  Write("i.cfg", "initial.velocity = 0.6283185307179586, 0, 0\n");
  ASSERT_EQ(Cli({"integrate", "--input", Path("d.csv"), "--config", Path("i.cfg"),
                 "--out", Path("traj.csv")}),
            0);
  ASSERT_EQ(Cli({"map", "--trajectory", Path("traj.csv"), "--out", Path("m.ppm"),
                 "--cells", Path("cells.csv")}),
            0);
  EXPECT_EQ(ReadFile(Path("m.ppm")).substr(0, 3), "P6\n");
  ASSERT_EQ(Cli({"export", "--trajectory", Path("traj.csv"), "--format", "ply",
                 "--out", "-"}),
            0);
  EXPECT_EQ(out_.str().substr(0, 4), "ply\n");
  EXPECT_EQ(Cli({"export", "--trajectory", Path("traj.csv"), "--format", "obj",
                 "--out", "-"}),
            kExitValidation);
  EXPECT_NE(err_.str().find("UnsupportedFormat"), std::string::npos);
}

TEST_F(CliTest, BundledStaticDatasetStaysAtOrigin) {
  const std::string data_dir = FOURD_DATA_DIR;
  ASSERT_EQ(Cli({"integrate", "--input", data_dir + "/static_bench_10s.csv",
                 "--config", data_dir + "/static_bench.cfg", "--out", "-"}),
            0)
      << err_.str();
  const auto points = ParseTrajectoryCsv(out_.str());
  ASSERT_EQ(points.size(), 1001u);
  for (const TrajectoryPoint& p : points) {
    EXPECT_EQ(p.chi, FourVector{});
    EXPECT_EQ(p.velocity, Vec3::Zero());
    EXPECT_EQ(p.gamma, 1.0);
  }
  EXPECT_TRUE(err_.str().empty());
}

TEST_F(CliTest, SuperluminalReportsTimestamp) {
  std::string data = kHeader;
  for (int k = 0; k <= 30; ++k) {
    data += std::to_string(k * 0.1) + ",0.5,0,0,0,0,0,0,0,0\n";
  }
  Write("fast.csv", data);
  EXPECT_EQ(Cli({"integrate", "--input", Path("fast.csv"), "--out", Path("t.csv")}),
            kExitValidation);
  EXPECT_NE(err_.str().find("SuperluminalSpeed"), std::string::npos);
  EXPECT_NE(err_.str().find("t=2 s"), std::string::npos) << err_.str();
  EXPECT_FALSE(fs::exists(Path("t.csv")));
}

TEST_F(CliTest, MalformedConfigIsValidationError) {
  Write("bad.cfg", "warp = 9\n");
  Write("d.csv", std::string(kHeader) + "0,0,0,0,0,0,0,0,0,0\n0.1,0,0,0,0,0,0,0,0,0\n");
  EXPECT_EQ(Cli({"integrate", "--input", Path("d.csv"), "--config", Path("bad.cfg"),
                 "--out", "-"}),
            kExitValidation);
  EXPECT_NE(err_.str().find("InvalidConfig"), std::string::npos);
}

}  // namespace
}  // namespace fourd
