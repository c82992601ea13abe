#include "pbdr/math.hpp"

#include <algorithm>
#include <cmath>

namespace pbdr {

Mat3 inverse(const Mat3& a, double det_tol) {
  const double d = a.det();
  if (std::abs(d) <= det_tol)
    throw DegenerateConfigError("3x3 inverse of a singular matrix");
  const double id = 1.0 / d;
  Mat3 r;
  r.m[0][0] = (a.m[1][1] * a.m[2][2] - a.m[1][2] * a.m[2][1]) * id;
  r.m[0][1] = (a.m[0][2] * a.m[2][1] - a.m[0][1] * a.m[2][2]) * id;
  r.m[0][2] = (a.m[0][1] * a.m[1][2] - a.m[0][2] * a.m[1][1]) * id;
  r.m[1][0] = (a.m[1][2] * a.m[2][0] - a.m[1][0] * a.m[2][2]) * id;
  r.m[1][1] = (a.m[0][0] * a.m[2][2] - a.m[0][2] * a.m[2][0]) * id;
  r.m[1][2] = (a.m[0][2] * a.m[1][0] - a.m[0][0] * a.m[1][2]) * id;
  r.m[2][0] = (a.m[1][0] * a.m[2][1] - a.m[1][1] * a.m[2][0]) * id;
  r.m[2][1] = (a.m[0][1] * a.m[2][0] - a.m[0][0] * a.m[2][1]) * id;
  r.m[2][2] = (a.m[0][0] * a.m[1][1] - a.m[0][1] * a.m[1][0]) * id;
  return r;
}

void sym_eigen(const Mat3& a, double values[3], Mat3& vectors) {
  // Cyclic Jacobi. 3x3 symmetric input converges in a handful of sweeps.
  double A[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) A[i][j] = 0.5 * (a.m[i][j] + a.m[j][i]);
  double V[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

  for (int sweep = 0; sweep < 32; ++sweep) {
    double off = std::abs(A[0][1]) + std::abs(A[0][2]) + std::abs(A[1][2]);
    double scale = std::abs(A[0][0]) + std::abs(A[1][1]) + std::abs(A[2][2]);
    if (off <= 1e-15 * std::max(scale, 1e-300)) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (A[p][q] == 0.0) continue;
        const double theta = (A[q][q] - A[p][p]) / (2.0 * A[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double app = A[p][p], aqq = A[q][q], apq = A[p][q];
        A[p][p] = c * c * app - 2 * s * c * apq + s * s * aqq;
        A[q][q] = s * s * app + 2 * s * c * apq + c * c * aqq;
        A[p][q] = A[q][p] = 0.0;
        for (int k = 0; k < 3; ++k) {
          if (k == p || k == q) continue;
          const double akp = A[k][p], akq = A[k][q];
          A[k][p] = A[p][k] = c * akp - s * akq;
          A[k][q] = A[q][k] = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          const double vkp = V[k][p], vkq = V[k][q];
          V[k][p] = c * vkp - s * vkq;
          V[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  int order[3] = {0, 1, 2};
  double ev[3] = {A[0][0], A[1][1], A[2][2]};
  std::sort(order, order + 3, [&](int i, int j) { return ev[i] < ev[j]; });
  for (int i = 0; i < 3; ++i) {
    values[i] = ev[order[i]];
    for (int k = 0; k < 3; ++k) vectors.m[k][i] = V[k][order[i]];
  }
}

Mat3 invert_spd(const Mat3& m, double rel_tol) {
  double ev[3];
  Mat3 v;
  sym_eigen(m, ev, v);
  const double tr = std::abs(m.trace());
  if (ev[0] < rel_tol * std::max(tr, 1e-300)) {
    Vec3 axis{v.m[0][0], v.m[1][0], v.m[2][0]};
    throw RankDeficientError("SPD inverse: matrix is rank-deficient", axis.x, axis.y, axis.z);
  }
  Mat3 r = Mat3::zero();
  for (int k = 0; k < 3; ++k) {
    const Vec3 u{v.m[0][k], v.m[1][k], v.m[2][k]};
    r += Mat3::outer(u, u) * (1.0 / ev[k]);
  }
  return r;
}

SpdPseudoInverse pseudo_invert_spd(const Mat3& m, double rel_tol) {
  double ev[3];
  Mat3 v;
  sym_eigen(m, ev, v);
  const double tr = std::abs(m.trace());
  SpdPseudoInverse out;
  out.pinv = Mat3::zero();
  out.rank = 0;
  for (int k = 0; k < 3; ++k) {
    const Vec3 u{v.m[0][k], v.m[1][k], v.m[2][k]};
    if (ev[k] >= rel_tol * std::max(tr, 1e-300)) {
      out.pinv += Mat3::outer(u, u) * (1.0 / ev[k]);
      ++out.rank;
    } else {
      out.null_axis = u;
    }
  }
  return out;
}

bool is_psd(const Mat3& m, double tol_rel) {
  double ev[3];
  Mat3 v;
  sym_eigen(m, ev, v);
  return ev[0] >= -tol_rel * std::max(std::abs(m.trace()), 1e-300);
}

Rotation Rotation::from_matrix(const Mat3& m) {
  Rotation q;
  const double tr = m.trace();
  if (tr > 0.0) {
    double s = std::sqrt(tr + 1.0) * 2.0;
    q.w = 0.25 * s;
    q.x = (m.m[2][1] - m.m[1][2]) / s;
    q.y = (m.m[0][2] - m.m[2][0]) / s;
    q.z = (m.m[1][0] - m.m[0][1]) / s;
  } else if (m.m[0][0] > m.m[1][1] && m.m[0][0] > m.m[2][2]) {
    double s = std::sqrt(1.0 + m.m[0][0] - m.m[1][1] - m.m[2][2]) * 2.0;
    q.w = (m.m[2][1] - m.m[1][2]) / s;
    q.x = 0.25 * s;
    q.y = (m.m[0][1] + m.m[1][0]) / s;
    q.z = (m.m[0][2] + m.m[2][0]) / s;
  } else if (m.m[1][1] > m.m[2][2]) {
    double s = std::sqrt(1.0 + m.m[1][1] - m.m[0][0] - m.m[2][2]) * 2.0;
    q.w = (m.m[0][2] - m.m[2][0]) / s;
    q.x = (m.m[0][1] + m.m[1][0]) / s;
    q.y = 0.25 * s;
    q.z = (m.m[1][2] + m.m[2][1]) / s;
  } else {
    double s = std::sqrt(1.0 + m.m[2][2] - m.m[0][0] - m.m[1][1]) * 2.0;
    q.w = (m.m[1][0] - m.m[0][1]) / s;
    q.x = (m.m[0][2] + m.m[2][0]) / s;
    q.y = (m.m[1][2] + m.m[2][1]) / s;
    q.z = 0.25 * s;
  }
  return q.normalized();
}

namespace {

double p1_norm(const Mat3& a) {
  double best = 0;
  for (int j = 0; j < 3; ++j) {
    double s = std::abs(a.m[0][j]) + std::abs(a.m[1][j]) + std::abs(a.m[2][j]);
    best = std::max(best, s);
  }
  return best;
}

double pinf_norm(const Mat3& a) {
  double best = 0;
  for (int i = 0; i < 3; ++i) {
    double s = std::abs(a.m[i][0]) + std::abs(a.m[i][1]) + std::abs(a.m[i][2]);
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

PolarResult polar_decompose(const Mat3& a, double det_tol) {
  if (!a.finite()) throw DegenerateConfigError("polar decomposition of non-finite matrix");
  if (a.det() <= det_tol)
    throw DegenerateConfigError("polar decomposition: determinant at or below tolerance");

  // Scaled Newton iteration: X <- (g*X + X^-T / g) / 2.
  Mat3 x = a;
  const double tol = 1e-9;
  for (int it = 0; it < 64; ++it) {
    Mat3 xin;
    try {
      xin = inverse(x, 1e-300);
    } catch (const DegenerateConfigError&) {
      throw DegenerateConfigError("polar decomposition: iteration became singular");
    }
    Mat3 xit = xin.transposed();
    const double xn = p1_norm(x) * pinf_norm(x);
    const double in = p1_norm(xit) * pinf_norm(xit);
    const double g = (xn > 0 && in > 0) ? std::pow(in / xn, 0.25) : 1.0;
    Mat3 next;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        next.m[i][j] = 0.5 * (g * x.m[i][j] + xit.m[i][j] / g);
    const double delta = (next - x).frobenius();
    x = next;
    if (delta <= tol * std::max(x.frobenius(), 1e-300)) break;
  }

  PolarResult out;
  out.rotation = Rotation::from_matrix(x);
  // Re-orthonormalized R gives the symmetric factor by S = R^T A.
  Mat3 r = out.rotation.to_matrix();
  Mat3 s = r.transposed() * a;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      double v = 0.5 * (s.m[i][j] + s.m[j][i]);
      s.m[i][j] = s.m[j][i] = v;
    }
  out.stretch = s;
  return out;
}

double geodesic_angle_deg(const Rotation& a, const Rotation& b) {
  Rotation qa = a.normalized(), qb = b.normalized();
  double d = std::abs(qa.w * qb.w + qa.x * qb.x + qa.y * qb.y + qa.z * qb.z);
  d = std::min(d, 1.0);
  return deg(2.0 * std::acos(d));
}

double unwrapped_angle_deg(const Rotation& a, const Rotation& b) {
  Rotation rel = (a.conjugate() * b).normalized();
  double vn = std::sqrt(rel.x * rel.x + rel.y * rel.y + rel.z * rel.z);
  double ang = 2.0 * std::atan2(vn, rel.w);  // [0, 2*pi) over the double cover
  return deg(ang);
}

double relative_yaw_rad(const Rotation& a, const Rotation& b) {
  Rotation rel = (a.conjugate() * b).normalized();
  double tw = 2.0 * std::atan2(rel.z, rel.w);
  if (tw > M_PI) tw -= 2.0 * M_PI;
  if (tw < -M_PI) tw += 2.0 * M_PI;
  return tw;
}

}  // namespace pbdr
