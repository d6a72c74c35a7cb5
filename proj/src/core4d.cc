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

#include "fourd/core4d.h"

#include <cmath>
#include <string>

#include "fourd/errors.h"

namespace fourd {
namespace {

// The plane rotations are tabulated in (x, y, z, zeta) order. kToTabulated[i]
// is the tabulated index of canonical component i of (zeta, x, y, z).
constexpr std::array<int, 4> kToTabulated = {3, 0, 1, 2};

Matrix4 TabulatedRotation(Plane plane, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Matrix4 m;
  switch (plane) {
    case Plane::kXY:
      m << c, -s, 0, 0,
           s, c, 0, 0,
           0, 0, 1, 0,
           0, 0, 0, 1;
      break;
    case Plane::kXZ:
      m << c, 0, s, 0,
           0, 1, 0, 0,
           -s, 0, c, 0,
           0, 0, 0, 1;
      break;
    case Plane::kYZ:
      m << 1, 0, 0, 0,
           0, c, -s, 0,
           0, s, c, 0,
           0, 0, 0, 1;
      break;
    case Plane::kZetaZ:
      m << 1, 0, 0, 0,
           0, 1, 0, 0,
           0, 0, c, s,
           0, 0, -s, c;
      break;
    case Plane::kZetaY:
      m << 1, 0, 0, 0,
           0, c, 0, s,
           0, 0, 1, 0,
           0, -s, 0, c;
      break;
    case Plane::kZetaX:
      m << c, 0, 0, -s,
           0, 1, 0, 0,
           0, 0, 1, 0,
           s, 0, 0, c;
      break;
    default:
      throw Error(ErrorCode::kUnknownPlane,
                  "plane tag " + std::to_string(static_cast<int>(plane)));
  }
  return m;
}

void RequireNonNegativeScale(double tau_gamma) {
  if (!(tau_gamma >= 0.0) || !std::isfinite(tau_gamma)) {
    throw Error(ErrorCode::kDomainError,
                "tau_gamma must be finite and >= 0, got " +
                    std::to_string(tau_gamma));
  }
}

}  // namespace

void RelativityConfig::Validate() const {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorCode::kInvalidConfig, "c must be finite and > 0");
  }
  if (!(epsilon_speed > 0.0 && epsilon_speed < 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "epsilon_speed must lie in (0, 1)");
  }
}

bool FourVector::IsFinite() const {
  return std::isfinite(zeta) && std::isfinite(x) && std::isfinite(y) &&
         std::isfinite(z);
}

std::string_view PlaneName(Plane plane) {
  switch (plane) {
    case Plane::kXY: return "xy";
    case Plane::kXZ: return "xz";
    case Plane::kYZ: return "yz";
    case Plane::kZetaZ: return "zeta_z";
    case Plane::kZetaY: return "zeta_y";
    case Plane::kZetaX: return "zeta_x";
  }
  throw Error(ErrorCode::kUnknownPlane,
              "plane tag " + std::to_string(static_cast<int>(plane)));
}

Plane ParsePlane(std::string_view name) {
  for (Plane p : kAllPlanes) {
    if (PlaneName(p) == name) return p;
  }
  throw Error(ErrorCode::kUnknownPlane,
              "unknown plane '" + std::string(name) + "'");
}

void ValidateRotationOrder(const RotationOrder& order) {
  std::array<int, 6> seen{};
  for (Plane p : order) {
    const int i = static_cast<int>(p);
    if (i < 0 || i >= 6) {
      throw Error(ErrorCode::kUnknownPlane, "plane tag " + std::to_string(i));
    }
    ++seen[i];
  }
  for (int count : seen) {
    if (count != 1) {
      throw Error(ErrorCode::kInvalidConfig,
                  "rotation order must name each of the six planes once");
    }
  }
}

double MinkowskiInterval(const FourVector& v) {
  return v.zeta * v.zeta - v.x * v.x - v.y * v.y - v.z * v.z;
}

Matrix4 MinkowskiMetric() {
  return Vec4(1.0, -1.0, -1.0, -1.0).asDiagonal();
}

double LorentzFactor(double speed, const RelativityConfig& cfg) {
  if (!(speed >= 0.0) || !std::isfinite(speed)) {
    throw Error(ErrorCode::kDomainError,
                "speed must be finite and >= 0, got " + std::to_string(speed));
  }
  const double beta = speed / cfg.c;
  if (beta >= 1.0 - cfg.epsilon_speed) {
    throw Error(ErrorCode::kSuperluminalSpeed,
                "speed " + std::to_string(speed) + " m/s reaches c = " +
                    std::to_string(cfg.c) + " m/s");
  }
  return 1.0 / std::sqrt(1.0 - beta * beta);
}

double LorentzScale(double gamma) {
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::kDomainError,
                "Lorentz factor must be >= 1, got " + std::to_string(gamma));
  }
  return gamma - 1.0;
}

Matrix4 LorentzBoost(const Vec3& velocity, const RelativityConfig& cfg) {
  if (!velocity.allFinite()) {
    throw Error(ErrorCode::kDomainError, "velocity must be finite");
  }
  const double v2 = velocity.squaredNorm();
  const double gamma = LorentzFactor(std::sqrt(v2), cfg);
  Matrix4 boost = Matrix4::Identity();
  boost(0, 0) = gamma;
  for (int i = 0; i < 3; ++i) {
    boost(0, i + 1) = -gamma * velocity[i] / cfg.c;
    boost(i + 1, 0) = boost(0, i + 1);
  }
  if (v2 > 0.0) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        boost(i + 1, j + 1) += (gamma - 1.0) * velocity[i] * velocity[j] / v2;
      }
    }
  }
  return boost;
}

double TemporalTranslation(const Vec3& translation, double tau_gamma) {
  RequireNonNegativeScale(tau_gamma);
  return tau_gamma * translation.norm();
}

Matrix5 TranslationMatrix(const FourVector& t) {
  Matrix5 m = Matrix5::Zero();
  m.diagonal() << 1.0, -1.0, -1.0, -1.0, 1.0;
  m(0, 4) = t.zeta;
  m(1, 4) = t.x;
  m(2, 4) = t.y;
  m(3, 4) = t.z;
  return m;
}

PrimedAngles ToPrimedAngles(const EulerAngles& angles, double tau_gamma) {
  RequireNonNegativeScale(tau_gamma);
  const double scale = 1.0 + tau_gamma;
  return {angles.psi * scale, angles.theta * scale, angles.phi * scale};
}

Matrix4 RotationMatrix(Plane plane, double angle) {
  if (!std::isfinite(angle)) {
    throw Error(ErrorCode::kDomainError, "rotation angle must be finite");
  }
  const Matrix4 tabulated = TabulatedRotation(plane, angle);
  Matrix4 m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      m(i, j) = tabulated(kToTabulated[i], kToTabulated[j]);
    }
  }
  return m;
}

Pose4D::Pose4D(const EulerAngles& angles, const PrimedAngles& primed,
               const FourVector& translation, const RotationOrder& order)
    : angles_(angles), primed_(primed), translation_(translation),
      order_(order) {
  ValidateRotationOrder(order_);
}

Pose4D Pose4D::FromMatrix(const Matrix4& rotation,
                          const FourVector& translation) {
  Pose4D pose;
  pose.translation_ = translation;
  pose.rotation_override_ = rotation;
  return pose;
}

double PlaneAngle(const Pose4D& pose, Plane plane) {
  switch (plane) {
    case Plane::kXY: return pose.angles().psi;
    case Plane::kXZ: return pose.angles().theta;
    case Plane::kYZ: return pose.angles().phi;
    case Plane::kZetaZ: return pose.primed().psi_p;
    case Plane::kZetaY: return pose.primed().theta_p;
    case Plane::kZetaX: return pose.primed().phi_p;
  }
  throw Error(ErrorCode::kUnknownPlane,
              "plane tag " + std::to_string(static_cast<int>(plane)));
}

Matrix4 Pose4D::rotation() const {
  if (rotation_override_) return *rotation_override_;
  Matrix4 r = Matrix4::Identity();
  for (Plane p : order_) r = r * RotationMatrix(p, PlaneAngle(*this, p));
  return r;
}

FourVector ApplyPose(const Pose4D& pose, const FourVector& v) {
  return FourVector::FromVec4(pose.rotation() * v.ToVec4() +
                              pose.translation().ToVec4());
}

Pose4D ComposePoses(const Pose4D& a, const Pose4D& b) {
  const Matrix4 ra = a.rotation();
  Pose4D out = Pose4D::FromMatrix(
      ra * b.rotation(),
      FourVector::FromVec4(ra * b.translation().ToVec4() +
                           a.translation().ToVec4()));
  // Angle sums only describe the result when both poses rotate in
  // commuting planes.
  out.angles_ = {a.angles().psi + b.angles().psi,
                 a.angles().theta + b.angles().theta,
                 a.angles().phi + b.angles().phi};
  out.primed_ = {a.primed().psi_p + b.primed().psi_p,
                 a.primed().theta_p + b.primed().theta_p,
                 a.primed().phi_p + b.primed().phi_p};
  return out;
}

}  // namespace fourd
