#pragma once

#include <limits>
#include <string>
#include <vector>

#include "pbdr/body.hpp"
#include "pbdr/math.hpp"

namespace pbdr {

enum class Precision { kSingle, kDouble };
enum class VelocityUpdate { kLegacy, kIncremental };
enum class Backend { kSerial, kParallel };
enum class MomentumFrequency { kPerIteration, kPerSubstep };

struct SolverConfig {
  double frame_rate = 100.0;  // Hz
  int substeps = 10;          // dt = 1 / (frame_rate * substeps)
  int solver_iterations = 10;
  Precision precision = Precision::kSingle;
  VelocityUpdate velocity_update = VelocityUpdate::kIncremental;
  bool linear_momentum_fix = true;
  bool angular_momentum_fix = true;
  MomentumFrequency momentum_frequency = MomentumFrequency::kPerIteration;
  double gravity = 9.81;  // magnitude along -z
  Backend backend = Backend::kParallel;

  double dt() const { return 1.0 / (frame_rate * substeps); }
  void validate() const;

  //! Baseline solver: large-difference velocity update, no momentum fixes.
  static SolverConfig pbd() {
    SolverConfig c;
    c.velocity_update = VelocityUpdate::kLegacy;
    c.linear_momentum_fix = false;
    c.angular_momentum_fix = false;
    return c;
  }
  //! Revised solver: incremental velocity update plus both momentum fixes.
  static SolverConfig pbdr() { return SolverConfig{}; }
};

struct Plane {
  Vec3 point{0, 0, 0};
  Vec3 normal{0, 0, 1};  // unit
  double friction = 0.0; // Coulomb coefficient, >= 0
};

//! Constant external wrench applied at a body's center of mass over a time
//! window. gravity_exempt marks held-tool bodies (e.g. a pusher guided by a
//! robot) that do not fall.
struct ForceProgram {
  Vec3 force{0, 0, 0};
  Vec3 torque{0, 0, 0};
  double t_start = 0.0;
  double t_stop = std::numeric_limits<double>::infinity();
  bool gravity_exempt = false;

  bool active(double t) const { return t >= t_start && t < t_stop; }
};

//! One benchmark instance: particles, bodies, support plane and per-body
//! external force programs.
struct Scene {
  std::vector<Particle> particles;
  std::vector<Body> bodies;
  std::vector<ForceProgram> programs;  // parallel to bodies
  Plane ground;
  bool has_ground = true;
  double contact_relaxation = 1.0;  // positional stiffness of contact pushes

  void validate() const;
};

//! Instantiates a packing as a rigid body appended to the scene. Particles
//! get uniform mass M/N; `rotate`/`translate` place the body; `jitter`
//! displaces each particle by a seeded uniform offset in [-jitter, jitter]^3
//! before the rest pose is recorded.
int add_packed_body(Scene& scene, const std::vector<Vec3>& centers, double radius,
                    double total_mass, const Rotation& rotate, const Vec3& translate,
                    double jitter, uint64_t seed);

}  // namespace pbdr
