#pragma once

#include <optional>
#include <vector>

#include "ringplane/projective.hpp"

namespace ringplane {

/// A point (a0, a1) of A(R), standing for the projective point (a0, a1, 1).
struct AffPoint {
  RingValue x, y;
  bool operator==(const AffPoint& o) const { return x == o.x && y == o.y; }
  bool operator!=(const AffPoint& o) const { return !(*this == o); }
  std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

/// Affine lines are the projective lines apart from (0,0,1), i.e. canonical
/// triples whose first or second coordinate is invertible.
bool is_affine_line(const ProjLine& l);

AffPoint mk_aff_point(const RingPtr& r, std::int64_t x, std::int64_t y);
ProjPoint embed(const AffPoint& a);  // (a0, a1, 1)
/// The affine part of a projective point, when its third coordinate is
/// invertible; nullopt otherwise.
std::optional<AffPoint> to_affine(const ProjPoint& p);

bool aff_apart(const AffPoint& a, const AffPoint& b);
bool aff_incident(const AffPoint& a, const ProjLine& l);
bool aff_outside(const AffPoint& a, const ProjLine& l);
/// Determinant criterion: the 2x2 block of the first two coordinates vanishes.
bool parallel(const ProjLine& k, const ProjLine& l);

ProjLine aff_line_through(const AffPoint& a, const AffPoint& b);  // pre a # b
/// The unique affine line through a parallel to k.
ProjLine parallel_through(const AffPoint& a, const ProjLine& k);
/// The affine intersection point, or nullopt when the projective meet escapes
/// the affine plane (third coordinate not invertible) or no unique projective
/// meet exists.
std::optional<AffPoint> aff_meet(const ProjLine& k, const ProjLine& l);

/// A(R) enumerated lexicographically: points (a0, a1) by coordinates, lines by
/// canonical triples.
struct AffPlaneModel {
  RingPtr ring;
  std::vector<AffPoint> points;
  std::vector<ProjLine> lines;
  FinitePlane fin;

  static AffPlaneModel build(const RingPtr& r);
  int point_index(const AffPoint& a) const;
  int line_index(const ProjLine& l) const;
};

}  // namespace ringplane
