#include "pbdr/body.hpp"

#include <cmath>

namespace pbdr {

namespace {

double particle_mass(const Particle& p) {
  if (p.inv_mass <= 0) throw Error("pinned particles are not supported in rigid bodies");
  return 1.0 / p.inv_mass;
}

}  // namespace

Body make_body(const std::vector<Particle>& particles, const std::vector<int>& indices) {
  if (indices.empty()) throw Error("make_body: empty particle set");
  Body b;
  b.particle_indices = indices;

  double mass = 0;
  Vec3 weighted{0, 0, 0};
  for (int i : indices) {
    const double m = particle_mass(particles[i]);
    mass += m;
    weighted += particles[i].position * m;
  }
  b.total_mass = mass;
  b.rest_com = weighted / mass;

  b.rest_offsets.reserve(indices.size());
  Mat3 second = Mat3::zero();
  for (int i : indices) {
    const Vec3 q = particles[i].position - b.rest_com;
    b.rest_offsets.push_back(q);
    second += Mat3::outer(q, q) * particle_mass(particles[i]);
  }

  double ev[3];
  Mat3 vecs;
  sym_eigen(second, ev, vecs);
  // Rest shape is a chain when only one principal extent is non-negligible.
  if (ev[1] <= 1e-8 * std::max(ev[2], 1e-300)) {
    b.collinear = true;
    b.rest_axis = normalized(Vec3{vecs.m[0][2], vecs.m[1][2], vecs.m[2][2]});
  }
  return b;
}

Vec3 compute_com(const Body& body, const std::vector<Particle>& particles) {
  double mass = 0;
  Vec3 weighted{0, 0, 0};
  for (int i : body.particle_indices) {
    const double m = particle_mass(particles[i]);
    mass += m;
    weighted += particles[i].position * m;
  }
  return weighted / mass;
}

Mat3 compute_inertia(const Body& body, const std::vector<Particle>& particles) {
  const Vec3 com = compute_com(body, particles);
  Mat3 inertia = Mat3::zero();
  for (int i : body.particle_indices) {
    const double m = particle_mass(particles[i]);
    const Vec3 r = particles[i].position - com;
    inertia += (Mat3::identity() * norm2(r) - Mat3::outer(r, r)) * m;
  }
  return inertia;
}

MomentumState compute_momentum(const Body& body, const std::vector<Particle>& particles) {
  MomentumState s;
  s.com = compute_com(body, particles);
  s.linear = {0, 0, 0};
  s.angular = {0, 0, 0};
  for (int i : body.particle_indices) {
    const double m = particle_mass(particles[i]);
    s.linear += particles[i].velocity * m;
    s.angular += cross(particles[i].position - s.com, particles[i].velocity * m);
  }
  return s;
}

namespace {

Rotation minimal_rotation(const Vec3& from, const Vec3& to) {
  const Vec3 f = normalized(from), t = normalized(to);
  const Vec3 ax = cross(f, t);
  const double s = norm(ax);
  const double c = dot(f, t);
  if (s <= 1e-15) {
    if (c > 0) return Rotation();
    // Antipodal: rotate pi about any axis perpendicular to f.
    Vec3 perp = std::abs(f.x) < 0.9 ? cross(f, Vec3{1, 0, 0}) : cross(f, Vec3{0, 1, 0});
    return Rotation::axis_angle(perp, M_PI);
  }
  return Rotation::axis_angle(ax, std::atan2(s, c));
}

}  // namespace

Pose extract_pose(const Body& body, const std::vector<Particle>& particles) {
  Pose pose;
  pose.com = compute_com(body, particles);

  Mat3 apq = Mat3::zero();
  for (size_t k = 0; k < body.particle_indices.size(); ++k) {
    const int i = body.particle_indices[k];
    const double m = particle_mass(particles[i]);
    apq += Mat3::outer(particles[i].position - pose.com, body.rest_offsets[k]) * m;
  }

  if (body.collinear) {
    const Vec3 heading = apq * body.rest_axis;
    if (norm(heading) <= 1e-15)
      throw DegenerateConfigError("extract_pose: collapsed chain");
    pose.orientation = minimal_rotation(body.rest_axis, heading);
    return pose;
  }

  pose.orientation = polar_decompose(apq).rotation;
  return pose;
}

std::vector<Vec3> distribute_wrench(const Body& body, const std::vector<Particle>& particles,
                                    const Vec3& force, const Vec3& torque) {
  const Vec3 com = compute_com(body, particles);
  Vec3 alpha{0, 0, 0};
  if (norm2(torque) > 0) {
    const Mat3 inertia = compute_inertia(body, particles);
    const SpdPseudoInverse pi = pseudo_invert_spd(inertia);
    if (pi.rank < 3) {
      const double along = std::abs(dot(torque, pi.null_axis));
      if (along > 1e-12)
        throw RankDeficientError("torque requested about a singular inertia axis",
                                 pi.null_axis.x, pi.null_axis.y, pi.null_axis.z);
    }
    alpha = pi.pinv * torque;
  }

  std::vector<Vec3> forces;
  forces.reserve(body.particle_indices.size());
  for (int i : body.particle_indices) {
    const double m = particle_mass(particles[i]);
    const Vec3 r = particles[i].position - com;
    forces.push_back(force * (m / body.total_mass) + cross(alpha, r) * m);
  }
  return forces;
}

}  // namespace pbdr
