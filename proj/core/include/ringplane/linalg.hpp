#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ringplane/ring.hpp"

namespace ringplane {

struct Vec2 {
  RingValue x, y;
};

struct Vec3 {
  RingValue x, y, z;
  const RingPtr& ring() const { return x.ring(); }
  bool operator==(const Vec3& o) const {
    return x == o.x && y == o.y && z == o.z;
  }
};

struct Mat2 {
  // row-major
  std::array<RingValue, 4> m;
  RingValue& at(int r, int c) { return m[static_cast<std::size_t>(2 * r + c)]; }
  const RingValue& at(int r, int c) const {
    return m[static_cast<std::size_t>(2 * r + c)];
  }
};

struct Mat3 {
  std::array<RingValue, 9> m;
  RingValue& at(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }
  const RingValue& at(int r, int c) const {
    return m[static_cast<std::size_t>(3 * r + c)];
  }
  const RingPtr& ring() const { return m[0].ring(); }
  bool operator==(const Mat3& o) const;
};

RingValue det2(const Mat2& a);
RingValue det3(const Mat3& a);

Mat3 mat3_identity(const RingPtr& r);
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
Vec3 mat3_apply(const Mat3& a, const Vec3& v);
Mat3 mat3_transpose(const Mat3& a);
Mat3 mat3_scale(const RingValue& s, const Mat3& a);
Mat3 adjugate3(const Mat3& a);
/// Inverse by adjugate over the determinant; requires det invertible.
Mat3 inverse3(const Mat3& a);
/// Columns assembled into a matrix.
Mat3 mat3_from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);

/// An element of the affine group G(R): invertible with bottom row (0,0,1).
class AffMatrix {
 public:
  explicit AffMatrix(Mat3 m);  // validates shape and invertibility
  const Mat3& mat() const { return m_; }
  AffMatrix mul(const AffMatrix& o) const;  // g_mul
  AffMatrix inverse() const;                // g_inverse
  Vec2 apply(const Vec2& p) const;          // action on affine points
  bool operator==(const AffMatrix& o) const { return m_ == o.m_; }

 private:
  Mat3 m_;
};

/// An element of H(R) = invertible 3x3 matrices modulo unit scalars, held by
/// the canonical representative whose first invertible entry in row-major
/// order equals 1.
class ProjClassMatrix {
 public:
  /// Canonicalizes any invertible matrix; throws if det is not invertible.
  static ProjClassMatrix canonicalize(const Mat3& m);
  static ProjClassMatrix identity(const RingPtr& r);
  const Mat3& rep() const { return m_; }
  ProjClassMatrix mul(const ProjClassMatrix& o) const;  // h_mul
  ProjClassMatrix inverse() const;                      // h_inverse
  bool operator==(const ProjClassMatrix& o) const { return m_ == o.m_; }
  bool operator!=(const ProjClassMatrix& o) const { return !(*this == o); }

 private:
  explicit ProjClassMatrix(Mat3 m) : m_(std::move(m)) {}
  Mat3 m_;
};

/// All of G(R) in a fixed order (entry-lexicographic in the ring's element
/// order). Finite rings only.
std::vector<AffMatrix> enumerate_G(const RingPtr& r);
/// All of H(R) as canonical representatives, entry-lexicographic.
std::vector<ProjClassMatrix> enumerate_H(const RingPtr& r);

/// Applies a ring homomorphism entrywise.
Mat3 mat3_map(const RingHom& f, const Mat3& m);

}  // namespace ringplane
