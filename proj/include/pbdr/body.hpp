#pragma once

#include <vector>

#include "pbdr/math.hpp"

namespace pbdr {

//! Simulation state unit. inv_mass > 0 for dynamic particles (zero would pin
//! the particle; benchmark scenes never use it).
struct Particle {
  Vec3 position;
  Vec3 velocity;
  double inv_mass = 1.0;
  double radius = 0.0;
  int body_id = -1;
};

//! Particle group forming one rigid object.
struct Body {
  std::vector<int> particle_indices;
  std::vector<Vec3> rest_offsets;  // relative to rest_com; mass-weighted sum is zero
  double total_mass = 0.0;
  Vec3 rest_com;

  // Rod-like rest poses have no well-defined spin about the chain axis; the
  // pose extraction reports the heading of this axis instead.
  bool collinear = false;
  Vec3 rest_axis{1, 0, 0};
};

struct MomentumState {
  Vec3 linear;   // kg*m/s
  Vec3 angular;  // kg*m^2/s, about com
  Vec3 com;
};

//! Builds a Body from a particle subset; records the rest pose (current
//! positions), total mass, and collinearity of the rest shape.
Body make_body(const std::vector<Particle>& particles, const std::vector<int>& indices);

//! Mass-weighted mean of member positions.
Vec3 compute_com(const Body& body, const std::vector<Particle>& particles);

//! I = sum_p m_p (|r_p|^2 I3 - r_p r_p^T) about the instantaneous com.
Mat3 compute_inertia(const Body& body, const std::vector<Particle>& particles);

//! P = sum m v; L = sum (x - com) x m v, both about the instantaneous com.
MomentumState compute_momentum(const Body& body, const std::vector<Particle>& particles);

struct Pose {
  Vec3 com;
  Rotation orientation;
};

//! Least-squares rigid pose relative to the rest configuration. Collinear
//! bodies report the minimal rotation carrying the rest axis to the current
//! chain heading. Throws DegenerateConfigError for collapsed configurations.
Pose extract_pose(const Body& body, const std::vector<Particle>& particles);

//! Force set realizing a com force F plus com torque tau on the discrete
//! body: f_p = (m_p/M) F + m_p * (alpha x r_p) with alpha = I^-1 tau.
//! Satisfies sum f = F and sum r x f = tau. Throws RankDeficientError when
//! tau has a component along a singular inertia axis.
std::vector<Vec3> distribute_wrench(const Body& body, const std::vector<Particle>& particles,
                                    const Vec3& force, const Vec3& torque);

}  // namespace pbdr
