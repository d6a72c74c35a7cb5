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

#ifndef FOURD_CORE4D_H_
#define FOURD_CORE4D_H_

#include <array>
#include <optional>
#include <string_view>

#include "Eigen/Core"

// Relativistic linear algebra on four-vectors (zeta, x, y, z), where
// zeta = c * t is the time axis expressed in meters. The metric signature
// is (+, -, -, -).
namespace fourd {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Matrix4 = Eigen::Matrix4d;
using Matrix5 = Eigen::Matrix<double, 5, 5>;

struct RelativityConfig {
  // Conversion speed in m/s. The unit-reduced default makes 1 m/s the
  // speed limit of the platform.
  double c = 1.0;
  // Speeds with |v|/c >= 1 - epsilon_speed are rejected.
  double epsilon_speed = 1e-12;

  // Throws Error(kInvalidConfig) unless c > 0 and 0 < epsilon_speed < 1.
  void Validate() const;
};

struct FourVector {
  double zeta = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static FourVector FromVec4(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
  Vec4 ToVec4() const { return {zeta, x, y, z}; }
  Vec3 spatial() const { return {x, y, z}; }
  bool IsFinite() const;

  friend bool operator==(const FourVector&, const FourVector&) = default;
};

// Rotation angles of the three purely spatial planes.
struct EulerAngles {
  double psi = 0.0;    // x-y plane (about z)
  double theta = 0.0;  // x-z plane
  double phi = 0.0;    // y-z plane

  friend bool operator==(const EulerAngles&, const EulerAngles&) = default;
};

// Rotation angles of the three planes containing the zeta axis.
struct PrimedAngles {
  double psi_p = 0.0;    // zeta-z plane
  double theta_p = 0.0;  // zeta-y plane
  double phi_p = 0.0;    // zeta-x plane

  friend bool operator==(const PrimedAngles&, const PrimedAngles&) = default;
};

enum class Plane { kXY, kXZ, kYZ, kZetaZ, kZetaY, kZetaX };

inline constexpr std::array<Plane, 6> kAllPlanes = {
    Plane::kXY,    Plane::kXZ,    Plane::kYZ,
    Plane::kZetaZ, Plane::kZetaY, Plane::kZetaX};

// Leftmost factor is applied last: for {A, B, ..., F} the stacked rotation
// is A * B * ... * F.
using RotationOrder = std::array<Plane, 6>;

inline constexpr RotationOrder kDefaultRotationOrder = {
    Plane::kXY,    Plane::kXZ,    Plane::kYZ,
    Plane::kZetaX, Plane::kZetaY, Plane::kZetaZ};

// Names are "xy", "xz", "yz", "zeta_z", "zeta_y", "zeta_x".
std::string_view PlaneName(Plane plane);
// Throws Error(kUnknownPlane) for any other tag.
Plane ParsePlane(std::string_view name);
// Throws Error(kInvalidConfig) unless `order` names every plane once.
void ValidateRotationOrder(const RotationOrder& order);

// zeta^2 - x^2 - y^2 - z^2.
double MinkowskiInterval(const FourVector& v);

// Minkowski metric diag(1, -1, -1, -1).
Matrix4 MinkowskiMetric();

// 1 / sqrt(1 - (speed / c)^2). Throws kDomainError for negative or
// non-finite speed and kSuperluminalSpeed once speed / c >= 1 - epsilon.
double LorentzFactor(double speed, const RelativityConfig& cfg);

// Scalar boost strength gamma - 1, zero at rest. Throws kDomainError for
// gamma < 1.
double LorentzScale(double gamma);

// Symmetric boost matrix in (zeta, x, y, z) order. The (gamma - 1) v_i v_j
// / v^2 terms vanish at v = 0, so the zero velocity maps to the identity.
Matrix4 LorentzBoost(const Vec3& velocity, const RelativityConfig& cfg);

// tau_gamma * |T|. Throws kDomainError for negative tau_gamma.
double TemporalTranslation(const Vec3& translation, double tau_gamma);

// Homogeneous 5x5 translation with diagonal (1, -1, -1, -1, 1) and last
// column (T_zeta, T_x, T_y, T_z, 1). Acting on (zeta, x, y, z, 1) it yields
// (zeta + T_zeta, -x + T_x, -y + T_y, -z + T_z, 1).
Matrix5 TranslationMatrix(const FourVector& t);

// Each angle scaled by (1 + tau_gamma). Throws kDomainError for negative
// tau_gamma.
PrimedAngles ToPrimedAngles(const EulerAngles& angles, double tau_gamma);

// Plane rotation in (zeta, x, y, z) order. The zeta planes use circular
// trigonometry, so they preserve the Euclidean 4-norm, not the interval.
Matrix4 RotationMatrix(Plane plane, double angle);

// Six plane angles plus a four-translation. Poses produced by ComposePoses
// keep their stacked rotation as a matrix; their angle fields are then
// informational only (see canonical()).
class Pose4D {
 public:
  Pose4D() = default;
  Pose4D(const EulerAngles& angles, const PrimedAngles& primed,
         const FourVector& translation,
         const RotationOrder& order = kDefaultRotationOrder);

  static Pose4D Identity() { return Pose4D(); }
  static Pose4D FromMatrix(const Matrix4& rotation,
                           const FourVector& translation);

  const EulerAngles& angles() const { return angles_; }
  const PrimedAngles& primed() const { return primed_; }
  const FourVector& translation() const { return translation_; }
  const RotationOrder& order() const { return order_; }

  // True when rotation() is determined by the angle fields.
  bool canonical() const { return !rotation_override_.has_value(); }

  Matrix4 rotation() const;

 private:
  EulerAngles angles_;
  PrimedAngles primed_;
  FourVector translation_;
  RotationOrder order_ = kDefaultRotationOrder;
  std::optional<Matrix4> rotation_override_;

  friend Pose4D ComposePoses(const Pose4D& a, const Pose4D& b);
};

double PlaneAngle(const Pose4D& pose, Plane plane);

// rotation() * v + translation.
FourVector ApplyPose(const Pose4D& pose, const FourVector& v);

// ApplyPose(result, v) == ApplyPose(a, ApplyPose(b, v)).
Pose4D ComposePoses(const Pose4D& a, const Pose4D& b);

}  // namespace fourd

#endif  // FOURD_CORE4D_H_
