#include "ringplane/linalg.hpp"

namespace ringplane {

bool Mat3::operator==(const Mat3& o) const {
  for (std::size_t i = 0; i < 9; ++i)
    if (!(m[i] == o.m[i])) return false;
  return true;
}

RingValue det2(const Mat2& a) {
  return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
}

RingValue det3(const Mat3& a) {
  // Leibniz expansion along the first row
  RingValue c0 = a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1);
  RingValue c1 = a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0);
  RingValue c2 = a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0);
  return a.at(0, 0) * c0 - a.at(0, 1) * c1 + a.at(0, 2) * c2;
}

Mat3 mat3_identity(const RingPtr& r) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = i == j ? r->one() : r->zero();
  return m;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      RingValue s = a.at(i, 0) * b.at(0, j);
      s = s + a.at(i, 1) * b.at(1, j);
      s = s + a.at(i, 2) * b.at(2, j);
      out.at(i, j) = s;
    }
  }
  return out;
}

Vec3 mat3_apply(const Mat3& a, const Vec3& v) {
  return Vec3{a.at(0, 0) * v.x + a.at(0, 1) * v.y + a.at(0, 2) * v.z,
              a.at(1, 0) * v.x + a.at(1, 1) * v.y + a.at(1, 2) * v.z,
              a.at(2, 0) * v.x + a.at(2, 1) * v.y + a.at(2, 2) * v.z};
}

Mat3 mat3_transpose(const Mat3& a) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.at(i, j) = a.at(j, i);
  return out;
}

Mat3 mat3_scale(const RingValue& s, const Mat3& a) {
  Mat3 out;
  for (std::size_t i = 0; i < 9; ++i) out.m[i] = s * a.m[i];
  return out;
}

Mat3 adjugate3(const Mat3& a) {
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return a.at(r0, c0) * a.at(r1, c1) - a.at(r0, c1) * a.at(r1, c0);
  };
  Mat3 out;
  // adj = transpose of cofactor matrix
  out.at(0, 0) = minor(1, 2, 1, 2);
  out.at(1, 0) = -minor(1, 2, 0, 2);
  out.at(2, 0) = minor(1, 2, 0, 1);
  out.at(0, 1) = -minor(0, 2, 1, 2);
  out.at(1, 1) = minor(0, 2, 0, 2);
  out.at(2, 1) = -minor(0, 2, 0, 1);
  out.at(0, 2) = minor(0, 1, 1, 2);
  out.at(1, 2) = -minor(0, 1, 0, 2);
  out.at(2, 2) = minor(0, 1, 0, 1);
  return out;
}

Mat3 inverse3(const Mat3& a) {
  auto dinv = det3(a).inverse();
  if (!dinv) throw Error("inverse3: determinant not invertible");
  return mat3_scale(*dinv, adjugate3(a));
}

Mat3 mat3_from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  Mat3 m;
  m.at(0, 0) = c0.x; m.at(1, 0) = c0.y; m.at(2, 0) = c0.z;
  m.at(0, 1) = c1.x; m.at(1, 1) = c1.y; m.at(2, 1) = c1.z;
  m.at(0, 2) = c2.x; m.at(1, 2) = c2.y; m.at(2, 2) = c2.z;
  return m;
}

// ---- AffMatrix -------------------------------------------------------------

AffMatrix::AffMatrix(Mat3 m) : m_(std::move(m)) {
  const auto& r = m_.ring();
  if (!(m_.at(2, 0) == r->zero()) || !(m_.at(2, 1) == r->zero()) ||
      !(m_.at(2, 2) == r->one()))
    throw Error("AffMatrix: bottom row must be (0,0,1)");
  if (!det3(m_).invertible())
    throw Error("AffMatrix: determinant not invertible");
}

AffMatrix AffMatrix::mul(const AffMatrix& o) const {
  return AffMatrix(mat3_mul(m_, o.m_));
}

AffMatrix AffMatrix::inverse() const { return AffMatrix(inverse3(m_)); }

Vec2 AffMatrix::apply(const Vec2& p) const {
  const auto& r = m_.ring();
  Vec3 v = mat3_apply(m_, Vec3{p.x, p.y, r->one()});
  return Vec2{v.x, v.y};
}

// ---- ProjClassMatrix -------------------------------------------------------

ProjClassMatrix ProjClassMatrix::canonicalize(const Mat3& m) {
  if (!det3(m).invertible())
    throw Error("ProjClassMatrix: determinant not invertible");
  for (std::size_t i = 0; i < 9; ++i) {
    if (auto inv = m.m[i].inverse()) return ProjClassMatrix(mat3_scale(*inv, m));
  }
  // unreachable for invertible matrices over a non-trivial ring
  throw Error("ProjClassMatrix: no invertible entry");
}

ProjClassMatrix ProjClassMatrix::identity(const RingPtr& r) {
  return canonicalize(mat3_identity(r));
}

ProjClassMatrix ProjClassMatrix::mul(const ProjClassMatrix& o) const {
  return canonicalize(mat3_mul(m_, o.m_));
}

ProjClassMatrix ProjClassMatrix::inverse() const {
  // the adjugate is an invertible representative of the inverse class
  return canonicalize(adjugate3(m_));
}

// ---- enumeration -----------------------------------------------------------

std::vector<AffMatrix> enumerate_G(const RingPtr& r) {
  if (!r->finite()) throw Error("enumerate_G requires a finite ring");
  auto elems = r->enumerate();
  std::vector<AffMatrix> out;
  Mat3 m = mat3_identity(r);
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& c : elems)
        for (const auto& d : elems)
          for (const auto& e : elems) {
            if (!(a * e - b * d).invertible()) continue;
            for (const auto& f : elems) {
              m.at(0, 0) = a; m.at(0, 1) = b; m.at(0, 2) = c;
              m.at(1, 0) = d; m.at(1, 1) = e; m.at(1, 2) = f;
              out.push_back(AffMatrix(m));
            }
          }
  return out;
}

std::vector<ProjClassMatrix> enumerate_H(const RingPtr& r) {
  if (!r->finite()) throw Error("enumerate_H requires a finite ring");
  auto elems = r->enumerate();
  const std::size_t n = elems.size();
  std::vector<bool> unit(n);
  for (std::size_t i = 0; i < n; ++i) unit[i] = elems[i].invertible();

  // A canonical representative has first invertible entry equal to 1; each
  // class contains exactly one such matrix, so filtering the full scan by
  // canonicity enumerates H without deduplication.
  const std::size_t one_idx = r->index(r->one());
  std::vector<ProjClassMatrix> out;
  std::array<std::size_t, 9> idx{};
  Mat3 m;
  while (true) {
    bool canonical = false, seen_unit = false;
    for (std::size_t i = 0; i < 9 && !seen_unit; ++i) {
      if (unit[idx[i]]) {
        seen_unit = true;
        canonical = idx[i] == one_idx;
      }
    }
    if (canonical) {
      for (std::size_t i = 0; i < 9; ++i) m.m[i] = elems[idx[i]];
      if (det3(m).invertible())
        out.push_back(ProjClassMatrix::canonicalize(m));
    }
    std::size_t k = 9;
    while (k > 0) {
      --k;
      if (++idx[k] < n) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
  }
}

Mat3 mat3_map(const RingHom& f, const Mat3& m) {
  Mat3 out;
  for (std::size_t i = 0; i < 9; ++i) out.m[i] = f(m.m[i]);
  return out;
}

}  // namespace ringplane
