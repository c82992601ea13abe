#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pbdr/math.hpp"

namespace pbdr {

struct BoundingBox {
  Vec3 min{0, 0, 0};
  Vec3 max{0, 0, 0};
  Vec3 extent() const { return max - min; }
  double diagonal() const { return norm(extent()); }
};

//! Triangle mesh (vertices in meters). Faces are vertex-index triples.
struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;

  BoundingBox bounds() const;
  void validate() const;  // throws Error on out-of-range indices
};

//! Equal-radius, non-overlapping sphere set discretizing a source shape.
struct SpherePacking {
  std::vector<Vec3> centers;
  double radius = 0;
  std::string source;       // human-readable shape descriptor
  long ambiguous_count = 0; // grid samples whose inside test stayed ambiguous
  long candidate_count = 0; // grid samples tested

  size_t size() const { return centers.size(); }
};

//! n^3 spheres on a uniform grid filling the box exactly. Radius is half the
//! smallest per-axis spacing.
SpherePacking pack_box(const Vec3& half_extents, int n_per_axis);

//! Single-sphere-wide chain of touching spheres along +x, centered on the
//! origin. Fractional remainder is dropped and the chain re-centered.
SpherePacking pack_rod(double length, double radius);

//! Parity of ray-triangle crossings along a fixed jittered direction.
//! Ambiguous hits re-jitter up to 8 attempts, then count as outside.
bool point_in_mesh(const Vec3& p, const TriMesh& mesh);

//! Same, with an out-flag for samples that stayed ambiguous after re-jitter.
bool point_in_mesh(const Vec3& p, const TriMesh& mesh, bool* ambiguous);

//! Grid-sampled mesh packing: candidate centers on a uniform grid of pitch
//! 2*radius over the bounding box; centers inside the mesh are retained.
//! Throws EmptyPackingError when no interior grid point exists.
SpherePacking pack_mesh(const TriMesh& mesh, double radius);

//! Checks the pairwise non-overlap invariant (distance >= 2r - 1e-9).
bool packing_non_overlapping(const SpherePacking& p);

// --- OBJ + CSV interfaces ---------------------------------------------------

//! Reads a triangulated OBJ ('v' and 'f' records; polygon faces are
//! fan-triangulated; texture/normal indices ignored).
TriMesh load_obj(const std::string& path);
TriMesh parse_obj(const std::string& text);

//! Packing export with header cx,cy,cz,radius.
void save_packing_csv(const SpherePacking& p, const std::string& path);

//! FNV-1a hash of a file's bytes; recorded alongside mesh-derived outputs so
//! packing counts can be cross-checked against a specific mesh version.
uint64_t file_fnv1a(const std::string& path);

}  // namespace pbdr
