#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace curvesim {

// Body-frame resultant force and moment about the CG.
struct BodyForces {
  Eigen::Vector3d force{0, 0, 0};
  Eigen::Vector3d moment{0, 0, 0};
};

struct RigidBodyParams {
  double mass = 1.0;
  Eigen::Vector3d inertia{1, 1, 1};  // principal moments (Ix, Iy, Iz)
};

// Body frame: x forward, y left, z up. Velocity (u, v, w) and angular rate
// (p, q, r) are body-frame; orientation maps body to world.
struct RigidBodyState {
  Eigen::Vector3d position{0, 0, 0};
  Eigen::Quaterniond orientation{1, 0, 0, 0};
  Eigen::Vector3d velocity{0, 0, 0};
  Eigen::Vector3d angular_velocity{0, 0, 0};
  double time = 0;

  Eigen::Matrix3d rotation() const { return orientation.toRotationMatrix(); }
  double roll() const;
  double pitch() const;
  double yaw() const;
};

// Gravity acceleration expressed in the body frame.
Eigen::Vector3d gravity_body(const Eigen::Quaterniond& orientation, double g);

struct BodyDerivative {
  Eigen::Vector3d vdot;
  Eigen::Vector3d wdot;
};

// Translational equations with the rotating-frame coupling (v_dot = F/m - w x v)
// and Euler's rotational equations on principal axes.
BodyDerivative body_acceleration(const RigidBodyParams& params,
                                 const RigidBodyState& state,
                                 const BodyForces& forces);

// Semi-implicit (symplectic) Euler: velocities first, then pose from the new
// velocities. Orientation is renormalized every step.
void integrate_body_semi_implicit(RigidBodyState& state, const RigidBodyParams& params,
                                  const BodyForces& forces, double dt);

Eigen::Quaterniond integrate_orientation(const Eigen::Quaterniond& q,
                                         const Eigen::Vector3d& omega_body, double dt);

}  // namespace curvesim
