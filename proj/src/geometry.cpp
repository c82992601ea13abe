#include "pbdr/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pbdr/parallel.hpp"
#include "pbdr/rng.hpp"

namespace pbdr {

BoundingBox TriMesh::bounds() const {
  BoundingBox bb;
  if (vertices.empty()) return bb;
  bb.min = bb.max = vertices[0];
  for (const Vec3& v : vertices) {
    bb.min.x = std::min(bb.min.x, v.x); bb.max.x = std::max(bb.max.x, v.x);
    bb.min.y = std::min(bb.min.y, v.y); bb.max.y = std::max(bb.max.y, v.y);
    bb.min.z = std::min(bb.min.z, v.z); bb.max.z = std::max(bb.max.z, v.z);
  }
  return bb;
}

void TriMesh::validate() const {
  const int n = static_cast<int>(vertices.size());
  for (const auto& t : triangles)
    for (int k = 0; k < 3; ++k)
      if (t[k] < 0 || t[k] >= n) throw Error("mesh triangle index out of range");
}

SpherePacking pack_box(const Vec3& half_extents, int n_per_axis) {
  if (n_per_axis < 1) throw Error("pack_box: n_per_axis must be >= 1");
  if (half_extents.x <= 0 || half_extents.y <= 0 || half_extents.z <= 0)
    throw Error("pack_box: half extents must be positive");

  const int n = n_per_axis;
  const Vec3 spacing = half_extents * (2.0 / n);
  const double min_spacing = std::min(spacing.x, std::min(spacing.y, spacing.z));

  SpherePacking p;
  p.radius = 0.5 * min_spacing;
  p.centers.reserve(static_cast<size_t>(n) * n * n);
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz)
        p.centers.push_back({-half_extents.x + (ix + 0.5) * spacing.x,
                             -half_extents.y + (iy + 0.5) * spacing.y,
                             -half_extents.z + (iz + 0.5) * spacing.z});
  char buf[128];
  std::snprintf(buf, sizeof buf, "box(h=%.9g,%.9g,%.9g,n=%d)",
                half_extents.x, half_extents.y, half_extents.z, n);
  p.source = buf;
  return p;
}

SpherePacking pack_rod(double length, double radius) {
  if (radius <= 0) throw Error("pack_rod: radius must be positive");
  if (length < 2 * radius) throw Error("pack_rod: length must be >= sphere diameter");

  const double pitch = 2.0 * radius;
  const int count = static_cast<int>(std::floor(length / pitch + 1e-9));
  SpherePacking p;
  p.radius = radius;
  p.centers.reserve(count);
  for (int k = 0; k < count; ++k)
    p.centers.push_back({(k - 0.5 * (count - 1)) * pitch, 0.0, 0.0});
  char buf[96];
  std::snprintf(buf, sizeof buf, "rod(L=%.9g,r=%.9g)", length, radius);
  p.source = buf;
  return p;
}

namespace {

enum class Hit { kMiss, kHit, kAmbiguous };

// Moller-Trumbore with an ambiguity band around edges, grazing rays and
// near-zero ray parameters.
Hit ray_triangle(const Vec3& orig, const Vec3& dir, const Vec3& a, const Vec3& b,
                 const Vec3& c) {
  constexpr double kEps = 1e-12;
  const Vec3 e1 = b - a;
  const Vec3 e2 = c - a;
  const Vec3 pv = cross(dir, e2);
  const double det = dot(e1, pv);
  const double scale = norm(e1) * norm(e2);
  if (std::abs(det) <= 1e-9 * std::max(scale, kEps)) {
    // Ray nearly parallel to the triangle plane. Only ambiguous if the
    // origin is close to that plane, otherwise a clean miss.
    const Vec3 n = cross(e1, e2);
    const double nn = norm(n);
    if (nn <= kEps) return Hit::kMiss;  // degenerate sliver
    const double d = std::abs(dot(orig - a, n / nn));
    return d <= 1e-9 * std::max(1.0, norm(orig - a)) ? Hit::kAmbiguous : Hit::kMiss;
  }
  const double inv = 1.0 / det;
  const Vec3 tv = orig - a;
  const double u = dot(tv, pv) * inv;
  const Vec3 qv = cross(tv, e1);
  const double v = dot(dir, qv) * inv;
  const double t = dot(e2, qv) * inv;
  constexpr double kBand = 1e-9;
  if (u < -kBand || v < -kBand || u + v > 1.0 + kBand) return Hit::kMiss;
  if (t < -kBand) return Hit::kMiss;
  if (u <= kBand || v <= kBand || u + v >= 1.0 - kBand || t <= kBand)
    return Hit::kAmbiguous;
  return Hit::kHit;
}

Vec3 jittered_direction(int attempt) {
  // Fixed pseudo-random sequence; attempt 0 is the canonical direction.
  Vec3 d{0.577350269, 0.577350269, 0.577350269};
  if (attempt > 0) {
    Rng rng(0x5EEDull + static_cast<uint64_t>(attempt));
    d.x += rng.next_in(-0.3, 0.3);
    d.y += rng.next_in(-0.3, 0.3);
    d.z += rng.next_in(-0.3, 0.3);
  }
  return normalized(d);
}

}  // namespace

bool point_in_mesh(const Vec3& p, const TriMesh& mesh, bool* ambiguous) {
  if (ambiguous) *ambiguous = false;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const Vec3 dir = jittered_direction(attempt);
    long crossings = 0;
    bool bad = false;
    for (const auto& t : mesh.triangles) {
      switch (ray_triangle(p, dir, mesh.vertices[t[0]], mesh.vertices[t[1]],
                           mesh.vertices[t[2]])) {
        case Hit::kHit: ++crossings; break;
        case Hit::kAmbiguous: bad = true; break;
        case Hit::kMiss: break;
      }
      if (bad) break;
    }
    if (!bad) return (crossings % 2) == 1;
  }
  if (ambiguous) *ambiguous = true;
  return false;  // unresolved after max re-jitters: reported as outside
}

bool point_in_mesh(const Vec3& p, const TriMesh& mesh) {
  return point_in_mesh(p, mesh, nullptr);
}

SpherePacking pack_mesh(const TriMesh& mesh, double radius) {
  if (radius <= 0) throw Error("pack_mesh: radius must be positive");
  mesh.validate();
  const BoundingBox bb = mesh.bounds();
  const Vec3 ext = bb.extent();
  const double pitch = 2.0 * radius;
  const int nx = static_cast<int>(std::floor(ext.x / pitch + 1e-12));
  const int ny = static_cast<int>(std::floor(ext.y / pitch + 1e-12));
  const int nz = static_cast<int>(std::floor(ext.z / pitch + 1e-12));
  if (nx < 1 || ny < 1 || nz < 1)
    throw EmptyPackingError("pack_mesh: radius too large for the mesh bounding box");

  std::vector<Vec3> candidates;
  candidates.reserve(static_cast<size_t>(nx) * ny * nz);
  for (int ix = 0; ix < nx; ++ix)
    for (int iy = 0; iy < ny; ++iy)
      for (int iz = 0; iz < nz; ++iz)
        candidates.push_back({bb.min.x + radius + ix * pitch,
                              bb.min.y + radius + iy * pitch,
                              bb.min.z + radius + iz * pitch});

  // Inside tests are independent; results are gathered in grid order so the
  // packing is deterministic no matter how the loop is scheduled.
  std::vector<uint8_t> inside(candidates.size(), 0);
  std::vector<uint8_t> ambiguous(candidates.size(), 0);
  par::for_each_index(true, 0, static_cast<std::ptrdiff_t>(candidates.size()),
                      [&](std::ptrdiff_t i) {
                        bool amb = false;
                        inside[i] = point_in_mesh(candidates[i], mesh, &amb) ? 1 : 0;
                        ambiguous[i] = amb ? 1 : 0;
                      });

  SpherePacking p;
  p.radius = radius;
  p.candidate_count = static_cast<long>(candidates.size());
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (inside[i]) p.centers.push_back(candidates[i]);
    if (ambiguous[i]) ++p.ambiguous_count;
  }
  if (p.centers.empty())
    throw EmptyPackingError("pack_mesh: no grid point lies inside the mesh");
  char buf[96];
  std::snprintf(buf, sizeof buf, "mesh(r=%.9g,tris=%zu)", radius, mesh.triangles.size());
  p.source = buf;
  return p;
}

bool packing_non_overlapping(const SpherePacking& p) {
  const double min_dist = 2.0 * p.radius - 1e-9;
  for (size_t i = 0; i < p.centers.size(); ++i)
    for (size_t j = i + 1; j < p.centers.size(); ++j)
      if (norm(p.centers[i] - p.centers[j]) < min_dist) return false;
  return true;
}

TriMesh parse_obj(const std::string& text) {
  TriMesh mesh;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      Vec3 v;
      if (!(ls >> v.x >> v.y >> v.z))
        throw Error("OBJ parse: bad vertex at line " + std::to_string(lineno));
      mesh.vertices.push_back(v);
    } else if (tag == "f") {
      std::vector<int> idx;
      std::string tok;
      while (ls >> tok) {
        // "f v", "f v/vt", "f v//vn", "f v/vt/vn" all start with the vertex id.
        size_t slash = tok.find('/');
        int v = std::stoi(slash == std::string::npos ? tok : tok.substr(0, slash));
        if (v < 0) v = static_cast<int>(mesh.vertices.size()) + v + 1;
        if (v < 1 || v > static_cast<int>(mesh.vertices.size()))
          throw Error("OBJ parse: face index out of range at line " + std::to_string(lineno));
        idx.push_back(v - 1);
      }
      if (idx.size() < 3)
        throw Error("OBJ parse: face with fewer than 3 vertices at line " + std::to_string(lineno));
      for (size_t k = 1; k + 1 < idx.size(); ++k)
        mesh.triangles.push_back({idx[0], idx[k], idx[k + 1]});
    }
  }
  mesh.validate();
  return mesh;
}

TriMesh load_obj(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open mesh file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_obj(ss.str());
}

void save_packing_csv(const SpherePacking& p, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error("cannot open output file: " + path);
  f << "cx,cy,cz,radius\n";
  char buf[160];
  for (const Vec3& c : p.centers) {
    std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g,%.9g\n", c.x, c.y, c.z, p.radius);
    f << buf;
  }
}

uint64_t file_fnv1a(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open file for hashing: " + path);
  uint64_t h = 1469598103934665603ull;
  char buf[4096];
  while (f.read(buf, sizeof buf) || f.gcount() > 0) {
    for (std::streamsize i = 0; i < f.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ull;
    }
    if (!f) break;
  }
  return h;
}

}  // namespace pbdr
