#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ringplane/linalg.hpp"
#include "ringplane/ring.hpp"
#include "ringplane/synthetic.hpp"

namespace ringplane {

/// A point of P(R): a unit-scaled triple held in canonical form, where the
/// first invertible coordinate equals 1.
struct ProjPoint {
  Vec3 v;
  bool operator==(const ProjPoint& o) const { return v == o.v; }
  bool operator!=(const ProjPoint& o) const { return !(v == o.v); }
  std::string str() const;
};

struct ProjLine {
  Vec3 v;
  bool operator==(const ProjLine& o) const { return v == o.v; }
  bool operator!=(const ProjLine& o) const { return !(v == o.v); }
  std::string str() const;
};

/// Canonicalizes a coordinate triple; throws if no coordinate is invertible.
ProjPoint mk_proj_point(const Vec3& v);
ProjLine mk_proj_line(const Vec3& v);
ProjPoint mk_proj_point(const RingPtr& r, std::int64_t a, std::int64_t b,
                        std::int64_t c);
ProjLine mk_proj_line(const RingPtr& r, std::int64_t a, std::int64_t b,
                      std::int64_t c);

bool pt_apart(const ProjPoint& a, const ProjPoint& b);
bool li_apart(const ProjLine& k, const ProjLine& l);
bool incident(const ProjPoint& a, const ProjLine& l);
bool outside(const ProjPoint& a, const ProjLine& l);

/// The unique line through two apart points (cross product, canonicalized).
ProjLine line_through(const ProjPoint& a, const ProjPoint& b);
/// The unique point on two apart lines.
ProjPoint meet(const ProjLine& k, const ProjLine& l);

ProjLine dualize(const ProjPoint& a);
ProjPoint dualize(const ProjLine& l);

/// det [a|b|c]; zero whenever some line passes through all three.
RingValue collinear_det(const ProjPoint& a, const ProjPoint& b,
                        const ProjPoint& c);
/// Requires a # b; true iff c lies on the line through a and b.
bool is_collinear_with(const ProjPoint& a, const ProjPoint& b,
                       const ProjPoint& c);

/// Non-collinearity via the two-condition form: b # c and a outside bc.
bool non_collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
bool non_concurrent(const ProjLine& k, const ProjLine& l, const ProjLine& m);

/// Four points with every 3-subset non-collinear.
struct Frame4 {
  ProjPoint a, b, o, i;
};
bool general_position(const ProjPoint& a, const ProjPoint& b,
                      const ProjPoint& o, const ProjPoint& i);

// ---- the delta relation -----------------------------------------------------

/// Side conditions under which the determinant criterion decides delta:
/// (k # l or a # b) and at least one of a, b outside at least one of k, l.
bool delta_side_conditions(const ProjLine& k, const ProjLine& l,
                           const ProjPoint& a, const ProjPoint& b);

/// (k.a)(l.b) - (k.b)(l.a) == 0. Throws if the side conditions fail.
bool delta_det(const ProjLine& k, const ProjLine& l, const ProjPoint& a,
               const ProjPoint& b);

struct DeltaWitness {
  ProjLine r;
  ProjPoint x;
};
/// Exhaustive witness search over a finite ring; first witness in the
/// enumeration order (lines outer, points inner).
std::optional<DeltaWitness> delta_search(const ProjLine& k, const ProjLine& l,
                                         const ProjPoint& a,
                                         const ProjPoint& b);

/// Decision procedure: determinant fast path when the side conditions hold,
/// witness search otherwise (finite rings only; throws for infinite rings
/// without side conditions).
bool delta(const ProjLine& k, const ProjLine& l, const ProjPoint& a,
           const ProjPoint& b);

// ---- configuration checkers -------------------------------------------------

enum class CheckStatus { PremisesFail, Holds, Violated };
struct CheckResult {
  CheckStatus status = CheckStatus::PremisesFail;
  std::string detail;  // failed premise, or empty
  bool holds() const { return status == CheckStatus::Holds; }
};

/// Desargues configuration check over ring coordinates: evaluates the five
/// delta premises, the side conditions, the four outside conditions, then the
/// conclusion delta(l, n, a, c).
CheckResult desargues_check(const ProjPoint& a, const ProjPoint& b,
                            const ProjPoint& c, const ProjPoint& d,
                            const ProjLine& k, const ProjLine& l,
                            const ProjLine& m, const ProjLine& n);

/// Pappus configuration check over ring coordinates.
CheckResult pappus_check(const std::array<ProjPoint, 6>& pts,
                         const std::array<ProjLine, 6>& lines);

// ---- frames and H -----------------------------------------------------------

/// The unique element of H(R) sending the standard frame to (a, b, c, d).
/// Over finite rings the constructed matrix is checked to act on every point
/// of the plane; over non-local rings this can fail and throws with the
/// offending point in the message.
ProjClassMatrix frame_to_H(const Frame4& frame);

// ---- the full plane over a finite ring ---------------------------------------

/// P(R) with points and lines enumerated lexicographically on canonical
/// coordinate vectors in the ring's element order.
struct ProjPlaneModel {
  RingPtr ring;
  std::vector<ProjPoint> points;
  std::vector<ProjLine> lines;
  FinitePlane fin;

  static ProjPlaneModel build(const RingPtr& r);
  int point_index(const ProjPoint& p) const;  // throws if absent
  int line_index(const ProjLine& l) const;
};

/// All canonical points of P(R) in enumeration order (finite rings).
std::vector<ProjPoint> enumerate_proj_points(const RingPtr& r);

}  // namespace ringplane
