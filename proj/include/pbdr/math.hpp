#pragma once

#include <cmath>
#include <cstdint>

#include "pbdr/errors.hpp"

namespace pbdr {

// ---------------------------------------------------------------------------
// Vec3
// ---------------------------------------------------------------------------

template <typename T>
struct Vec3T {
  T x = 0, y = 0, z = 0;

  Vec3T() = default;
  Vec3T(T x_, T y_, T z_) : x(x_), y(y_), z(z_) {}

  template <typename U>
  Vec3T<U> cast() const {
    return Vec3T<U>(static_cast<U>(x), static_cast<U>(y), static_cast<U>(z));
  }

  Vec3T operator+(const Vec3T& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3T operator-(const Vec3T& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3T operator-() const { return {-x, -y, -z}; }
  Vec3T operator*(T s) const { return {x * s, y * s, z * s}; }
  Vec3T operator/(T s) const { return {x / s, y / s, z / s}; }
  Vec3T& operator+=(const Vec3T& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3T& operator-=(const Vec3T& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Vec3T& operator*=(T s) { x *= s; y *= s; z *= s; return *this; }

  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

template <typename T>
inline Vec3T<T> operator*(T s, const Vec3T<T>& v) { return v * s; }

template <typename T>
inline T dot(const Vec3T<T>& a, const Vec3T<T>& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

template <typename T>
inline Vec3T<T> cross(const Vec3T<T>& a, const Vec3T<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <typename T>
inline T norm2(const Vec3T<T>& v) { return dot(v, v); }

template <typename T>
inline T norm(const Vec3T<T>& v) { return std::sqrt(norm2(v)); }

template <typename T>
inline Vec3T<T> normalized(const Vec3T<T>& v) {
  T n = norm(v);
  return n > T(0) ? v / n : Vec3T<T>(0, 0, 0);
}

using Vec3 = Vec3T<double>;
using Vec3f = Vec3T<float>;

// ---------------------------------------------------------------------------
// Mat3 (double precision; row-major). All heavy numerics run in 64-bit so the
// reference/metric path never shares the solver's single-precision drift.
// ---------------------------------------------------------------------------

struct Mat3 {
  // m[r][c]
  double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

  static Mat3 identity() {
    Mat3 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
    return r;
  }
  static Mat3 zero() { return Mat3{}; }

  static Mat3 diag(double a, double b, double c) {
    Mat3 r;
    r.m[0][0] = a; r.m[1][1] = b; r.m[2][2] = c;
    return r;
  }

  static Mat3 outer(const Vec3& a, const Vec3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
      const double ai = (i == 0 ? a.x : i == 1 ? a.y : a.z);
      r.m[i][0] = ai * b.x; r.m[i][1] = ai * b.y; r.m[i][2] = ai * b.z;
    }
    return r;
  }

  double& operator()(int r, int c) { return m[r][c]; }
  double operator()(int r, int c) const { return m[r][c]; }

  Mat3 operator+(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i) for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
  }
  Mat3 operator-(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i) for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
    return r;
  }
  Mat3 operator*(double s) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i) for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] * s;
    return r;
  }
  Mat3& operator+=(const Mat3& o) {
    for (int i = 0; i < 3; ++i) for (int j = 0; j < 3; ++j) m[i][j] += o.m[i][j];
    return *this;
  }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
    return r;
  }

  Vec3 operator*(const Vec3& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }

  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i) for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  double det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  double trace() const { return m[0][0] + m[1][1] + m[2][2]; }

  double frobenius() const {
    double s = 0;
    for (int i = 0; i < 3; ++i) for (int j = 0; j < 3; ++j) s += m[i][j] * m[i][j];
    return std::sqrt(s);
  }

  bool finite() const {
    for (int i = 0; i < 3; ++i) for (int j = 0; j < 3; ++j)
      if (!std::isfinite(m[i][j])) return false;
    return true;
  }

  bool is_symmetric(double tol = 1e-12) const {
    return std::abs(m[0][1] - m[1][0]) <= tol && std::abs(m[0][2] - m[2][0]) <= tol &&
           std::abs(m[1][2] - m[2][1]) <= tol;
  }
};

//! General 3x3 inverse via adjugate. Throws on |det| below tolerance.
Mat3 inverse(const Mat3& a, double det_tol = 1e-300);

//! Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
//! Eigenvalues ascend; `vectors` columns are the matching orthonormal basis.
void sym_eigen(const Mat3& a, double values[3], Mat3& vectors);

//! SPD inverse. Smallest eigenvalue below rel_tol * trace raises
//! RankDeficientError carrying the near-null axis.
Mat3 invert_spd(const Mat3& m, double rel_tol = 1e-10);

//! Pseudo-inverse of a symmetric PSD matrix with explicit null-space report.
struct SpdPseudoInverse {
  Mat3 pinv;
  int rank = 3;
  Vec3 null_axis{0, 0, 0};  // meaningful when rank < 3 (the weakest axis)
};
SpdPseudoInverse pseudo_invert_spd(const Mat3& m, double rel_tol = 1e-10);

//! Checks positive semidefiniteness within -tol_rel * trace on eigenvalues.
bool is_psd(const Mat3& m, double tol_rel = 1e-9);

// ---------------------------------------------------------------------------
// Rotation: unit quaternion (w, x, y, z), Hamilton convention.
// ---------------------------------------------------------------------------

struct Rotation {
  double w = 1, x = 0, y = 0, z = 0;

  Rotation() = default;
  Rotation(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  //! Axis-angle constructor; the angle is NOT reduced modulo 2*pi, so the
  //! quaternion double cover distinguishes e.g. 10 deg from 370 deg.
  static Rotation axis_angle(const Vec3& axis, double angle_rad) {
    Vec3 a = normalized(axis);
    double h = 0.5 * angle_rad;
    double s = std::sin(h);
    return {std::cos(h), a.x * s, a.y * s, a.z * s};
  }

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

  Rotation normalized() const {
    double n = norm();
    if (n <= 0) return Rotation();
    return {w / n, x / n, y / n, z / n};
  }

  Rotation conjugate() const { return {w, -x, -y, -z}; }

  Rotation operator*(const Rotation& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }

  Mat3 to_matrix() const {
    Mat3 r;
    const double xx = x * x, yy = y * y, zz = z * z;
    const double xy = x * y, xz = x * z, yz = y * z;
    const double wx = w * x, wy = w * y, wz = w * z;
    r.m[0][0] = 1 - 2 * (yy + zz); r.m[0][1] = 2 * (xy - wz); r.m[0][2] = 2 * (xz + wy);
    r.m[1][0] = 2 * (xy + wz); r.m[1][1] = 1 - 2 * (xx + zz); r.m[1][2] = 2 * (yz - wx);
    r.m[2][0] = 2 * (xz - wy); r.m[2][1] = 2 * (yz + wx); r.m[2][2] = 1 - 2 * (xx + yy);
    return r;
  }

  //! Robust extraction from a proper rotation matrix (largest-pivot branch).
  static Rotation from_matrix(const Mat3& m);

  Vec3 rotate(const Vec3& v) const { return to_matrix() * v; }
};

//! Polar decomposition A = R * S with S symmetric positive-definite and R the
//! closest rotation in Frobenius norm. Scaled Newton iteration, tolerance
//! 1e-9, at most 64 iterations. det(A) <= det_tol raises DegenerateConfigError.
struct PolarResult {
  Rotation rotation;
  Mat3 stretch;
};
PolarResult polar_decompose(const Mat3& a, double det_tol = 1e-12);

//! Geodesic angle between two rotations, in degrees, range [0, 180].
double geodesic_angle_deg(const Rotation& a, const Rotation& b);

//! Long-form relative angle using the quaternion double cover, range [0, 720).
//! Distinguishes one extra full revolution (e.g. 10 deg vs 370 deg inputs).
double unwrapped_angle_deg(const Rotation& a, const Rotation& b);

//! Signed yaw (rotation about +z) of the relative rotation a^-1 * b, radians.
//! Intended for small per-frame increments that an accumulator sums into an
//! unbounded angle.
double relative_yaw_rad(const Rotation& a, const Rotation& b);

//! Accumulates per-frame rotation increments about a fixed axis into an
//! unbounded, unwrapped angle.
class AccumulatedAngle {
 public:
  explicit AccumulatedAngle(const Vec3& axis = Vec3(0, 0, 1))
      : axis_(normalized(axis)) {}

  //! Feed the next orientation sample; returns the accumulated angle (rad).
  double feed(const Rotation& r) {
    if (!started_) {
      started_ = true;
      prev_ = r;
      return total_;
    }
    Rotation rel = (prev_.conjugate() * r).normalized();
    // Twist of the relative rotation about the tracked axis.
    Vec3 v{rel.x, rel.y, rel.z};
    double proj = dot(v, axis_);
    double tw = 2.0 * std::atan2(proj, rel.w);
    if (tw > M_PI) tw -= 2.0 * M_PI;
    if (tw < -M_PI) tw += 2.0 * M_PI;
    total_ += tw;
    prev_ = r;
    return total_;
  }

  double total_rad() const { return total_; }
  double total_deg() const { return total_ * 180.0 / M_PI; }

 private:
  Vec3 axis_;
  Rotation prev_;
  double total_ = 0.0;
  bool started_ = false;
};

inline double deg(double rad) { return rad * 180.0 / M_PI; }
inline double rad(double deg) { return deg * M_PI / 180.0; }

}  // namespace pbdr
