#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringplane/ring.hpp"

namespace ringplane {

enum class PlaneKind { Affine, Projective };

/// Dense bit matrix, row-major.
class BitMat {
 public:
  BitMat() = default;
  BitMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), bits_((rows * cols + 63) / 64, 0) {}
  bool get(std::size_t r, std::size_t c) const {
    std::size_t i = r * cols_ + c;
    return (bits_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v = true) {
    std::size_t i = r * cols_ + c;
    if (v)
      bits_[i >> 6] |= std::uint64_t(1) << (i & 63);
    else
      bits_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool operator==(const BitMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Explicit finite relational presentation of a plane. Points and lines are
/// indices; the five relations are stored fully, nothing is inferred.
struct FinitePlane {
  PlaneKind kind = PlaneKind::Projective;
  int np = 0, nl = 0;
  BitMat apart_pt;  // np x np, irreflexive symmetric
  BitMat apart_li;  // nl x nl
  BitMat incident;  // np x nl
  BitMat outside;   // np x nl, disjoint from incident
  BitMat parallel;  // nl x nl, affine kind only

  bool pt_apart(int a, int b) const { return apart_pt.get(std::size_t(a), std::size_t(b)); }
  bool li_apart(int k, int l) const { return apart_li.get(std::size_t(k), std::size_t(l)); }
  bool in(int p, int l) const { return incident.get(std::size_t(p), std::size_t(l)); }
  bool out(int p, int l) const { return outside.get(std::size_t(p), std::size_t(l)); }
  bool par(int k, int l) const { return parallel.get(std::size_t(k), std::size_t(l)); }

  bool operator==(const FinitePlane& o) const {
    return kind == o.kind && np == o.np && nl == o.nl &&
           apart_pt == o.apart_pt && apart_li == o.apart_li &&
           incident == o.incident && outside == o.outside &&
           parallel == o.parallel;
  }
};

/// Parses the line-based plane format. Throws Error with a line number on
/// malformed input, out-of-range indices, reflexive apartness, incident and
/// outside overlapping, or a parallel relation in a projective plane.
FinitePlane parse_plane(const std::string& text);

/// Serializes to the canonical text form: header, then relation lines sorted,
/// symmetric relations emitted once with the smaller index first.
std::string serialize_plane(const FinitePlane& p);

/// Point/line swap; projective planes only.
FinitePlane dual_plane(const FinitePlane& p);

/// The preaffine plane induced by a projective plane and a chosen line:
/// points outside l_inf, lines apart from l_inf, parallel = equal meets
/// with l_inf.
struct DerivedAffine {
  FinitePlane plane;
  int l_inf = -1;
  std::vector<int> point_to_parent, line_to_parent;
  std::vector<int> parent_point_to_derived, parent_line_to_derived;  // -1 if absent
};
DerivedAffine derive_affine(const FinitePlane& proj, int l_inf);

/// Navigation tables over a finite plane. Built once, queried in inner loops.
/// join/meet/parallel_through return -1 when no candidate exists and -2 when
/// the candidate is not unique; callers relying on uniqueness must have
/// verified the axiom suite first.
struct PlaneGeometry {
  explicit PlaneGeometry(const FinitePlane& p);

  const FinitePlane* plane;
  std::vector<std::vector<int>> pts_on_line;
  std::vector<std::vector<int>> lines_thru_pt;

  int join(int a, int b) const { return join_[std::size_t(a) * std::size_t(plane->np) + std::size_t(b)]; }
  int meet(int k, int l) const { return meet_[std::size_t(k) * std::size_t(plane->nl) + std::size_t(l)]; }
  int parallel_through(int p, int k) const;

  /// All lines incident with both points (any pair, apart or not).
  std::vector<int> lines_containing(int a, int b) const;
  /// All points incident with both lines.
  const std::vector<int>& common_points(int k, int l) const {
    return common_[std::size_t(k) * std::size_t(plane->nl) + std::size_t(l)];
  }
  /// First point outside line l in index order, -1 if none.
  int first_point_outside(int l) const;

 private:
  std::vector<int> join_;   // np*np
  std::vector<int> meet_;   // nl*nl
  std::vector<int> parthru_;  // np*nl, affine only
  std::vector<std::vector<int>> common_;  // nl*nl
};

}  // namespace ringplane
