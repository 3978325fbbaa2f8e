#include "curvesim/body.hpp"

#include <algorithm>
#include <cmath>

namespace curvesim {

double RigidBodyState::roll() const {
  const Eigen::Matrix3d r = rotation();
  return std::atan2(r(2, 1), r(2, 2));
}

double RigidBodyState::pitch() const {
  const Eigen::Matrix3d r = rotation();
  return -std::asin(std::clamp(r(2, 0), -1.0, 1.0));
}

double RigidBodyState::yaw() const {
  const Eigen::Matrix3d r = rotation();
  return std::atan2(r(1, 0), r(0, 0));
}

Eigen::Vector3d gravity_body(const Eigen::Quaterniond& orientation, double g) {
  return orientation.conjugate() * Eigen::Vector3d(0, 0, -g);
}

BodyDerivative body_acceleration(const RigidBodyParams& params,
                                 const RigidBodyState& state,
                                 const BodyForces& forces) {
  BodyDerivative d;
  const Eigen::Vector3d& w = state.angular_velocity;
  d.vdot = forces.force / params.mass - w.cross(state.velocity);
  const Eigen::Vector3d& inertia = params.inertia;
  d.wdot.x() = (forces.moment.x() + (inertia.y() - inertia.z()) * w.y() * w.z()) / inertia.x();
  d.wdot.y() = (forces.moment.y() + (inertia.z() - inertia.x()) * w.z() * w.x()) / inertia.y();
  d.wdot.z() = (forces.moment.z() + (inertia.x() - inertia.y()) * w.x() * w.y()) / inertia.z();
  return d;
}

Eigen::Quaterniond integrate_orientation(const Eigen::Quaterniond& q,
                                         const Eigen::Vector3d& omega_body, double dt) {
  const Eigen::Quaterniond omega_q(0, omega_body.x(), omega_body.y(), omega_body.z());
  const Eigen::Quaterniond qdot = Eigen::Quaterniond(
      0.5 * (q * omega_q).coeffs());
  Eigen::Quaterniond out;
  out.coeffs() = q.coeffs() + qdot.coeffs() * dt;
  out.normalize();
  return out;
}

void integrate_body_semi_implicit(RigidBodyState& state, const RigidBodyParams& params,
                                  const BodyForces& forces, double dt) {
  const BodyDerivative d = body_acceleration(params, state, forces);
  state.velocity += d.vdot * dt;
  state.angular_velocity += d.wdot * dt;
  state.position += state.rotation() * state.velocity * dt;
  state.orientation = integrate_orientation(state.orientation, state.angular_velocity, dt);
  state.time += dt;
}

}  // namespace curvesim
