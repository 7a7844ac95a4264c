#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "ringplane/affine.hpp"
#include "ringplane/axioms.hpp"
#include "ringplane/linalg.hpp"
#include "ringplane/morphisms.hpp"
#include "ringplane/synthetic.hpp"

namespace ringplane {

/// A finite affine plane prepared for the coordinatization constructions.
/// All of them presuppose the affine axiom suite; the geometric recipes abort
/// with a diagnostic when an intersection they rely on fails to exist.
class AffineCtx {
 public:
  explicit AffineCtx(FinitePlane plane);

  const FinitePlane& plane() const { return plane_; }
  const PlaneGeometry& geom() const { return geom_; }
  int base_a() const { return base_a_; }  // lexicographically first apart pair
  int base_b() const { return base_b_; }

  int join(int a, int b) const;              // unique line, throws otherwise
  int meet_unique(int k, int l) const;       // unique common point
  int parallel_thru(int a, int k) const;     // unique parallel
  int first_outside(int l) const;            // first point outside l

 private:
  FinitePlane plane_;
  PlaneGeometry geom_;
  int base_a_ = -1, base_b_ = -1;
};

/// The translation sending src to dst, carried by that witness pair. Equality
/// of translations is decided by the action on one point.
struct Translation {
  int src = -1, dst = -1;
};

int translation_apply(const AffineCtx& ctx, const Translation& t, int r);
Translation translation_compose(const AffineCtx& ctx, const Translation& t1,
                                const Translation& t2);
Translation translation_inverse(const AffineCtx& ctx, const Translation& t);
bool translation_eq(const AffineCtx& ctx, const Translation& t1,
                    const Translation& t2);

/// The dilatation determined by p -> p2, q -> q2 (preconditions p # q,
/// p2 # q2, pq parallel to p2q2).
class Dilatation {
 public:
  static Dilatation from_two_points(const AffineCtx& ctx, int p, int q, int p2,
                                    int q2);
  /// Fixed point p, q -> q2 on the line pq (preconditions q # p # q2).
  static Dilatation from_fixed(const AffineCtx& ctx, int p, int q, int q2);
  int apply(const AffineCtx& ctx, int a) const;

  int p, q, p2, q2;

 private:
  Translation shift_;          // p -> p2
  int fq_ = -1, fq2_ = -1;     // fixed-point part at p2: fq -> fq2
  int aux_ = -1, aux2_ = -1;   // auxiliary point off p2.fq and its image
};

/// A trace preserving homomorphism alpha_{ABC}: the unique one sending the
/// translation tau_AB to tau_AC. Requires a # b and c on the line ab.
struct TpElement {
  int a = -1, b = -1, c = -1;
};

/// tau^alpha, via the quotient presentation of Tp: the parallel-transport
/// construction when tau(a) lands outside ab, rebasing through an auxiliary
/// point otherwise.
Translation tp_apply(const AffineCtx& ctx, const TpElement& alpha,
                     const Translation& tau);

/// Rewrites alpha on the context's base pair; all ring operations below
/// return canonical elements.
TpElement tp_canonical(const AffineCtx& ctx, const TpElement& alpha);
bool tp_eq(const AffineCtx& ctx, const TpElement& x, const TpElement& y);
TpElement tp_zero(const AffineCtx& ctx);
TpElement tp_one(const AffineCtx& ctx);
TpElement tp_add(const AffineCtx& ctx, const TpElement& x, const TpElement& y);
TpElement tp_neg(const AffineCtx& ctx, const TpElement& x);
TpElement tp_mul(const AffineCtx& ctx, const TpElement& x, const TpElement& y);
bool tp_is_invertible(const AffineCtx& ctx, const TpElement& x);
TpElement tp_inverse(const AffineCtx& ctx, const TpElement& x);

/// The ring of trace preserving homomorphisms, materialized as a table ring.
/// Element i corresponds to elems[i], the canonical representative whose
/// third point is the i-th point of the base line in index order.
struct TpRing {
  RingPtr ring;
  std::vector<TpElement> elems;
  std::size_t index_of(const AffineCtx& ctx, const TpElement& e) const;
  RingValue value_of(const AffineCtx& ctx, const TpElement& e) const;
  const TpElement& element(const RingValue& v) const;
};

/// Enumerates Tp over the base pair, installs the ring operations and checks
/// the ring axioms and locality exhaustively.
TpRing build_tp_ring(const AffineCtx& ctx);

/// The canonical isomorphism A(Tp) -> plane determined by a non-collinear
/// frame (x, y, o): (alpha, beta) maps to tau_ox^alpha tau_oy^beta (o).
struct CoordMap {
  std::unique_ptr<AffPlaneModel> model;  // A(Tp)
  std::vector<int> fwd_pt, fwd_li;       // model index -> plane index
  std::vector<int> inv_pt, inv_li;
};
CoordMap coord_map(const AffineCtx& ctx, const TpRing& tp, int x, int y, int o);

/// Coordinates of a plane point with respect to the frame (x, y, o).
std::pair<TpElement, TpElement> coord_inverse(const AffineCtx& ctx, int x,
                                              int y, int o, int point);

/// Ordered non-collinear point triples.
std::vector<std::array<int, 3>> enumerate_omega(const FinitePlane& p,
                                                const PlaneGeometry& g);
/// Ordered general-position quadruples of a projective plane.
std::vector<std::array<int, 4>> enumerate_omega4(const FinitePlane& p,
                                                 const PlaneGeometry& g);

/// Reconstruction of the coordinate ring from a projective plane with a frame
/// (a, b, o, i) in general position: builds x = ib . oa and y = ia . ob,
/// derives the affine plane at the line ab, coordinatizes it, and extends the
/// affine isomorphism A(Tp) -> derived plane to a projective isomorphism
/// P(Tp) -> plane mapping the standard frame to (a, b, o, i).
struct ProjCoordinatization {
  TpRing tp;
  std::unique_ptr<ProjPlaneModel> model;    // P(Tp)
  std::unique_ptr<DerivedAffine> derived;   // the affine plane at ab
  std::unique_ptr<AffineCtx> ctx;
  PlaneMorphism iso;                        // model->fin to the input plane
};
ProjCoordinatization proj_coordinatize(const FinitePlane& proj, int a, int b,
                                       int o, int i);

/// omega(R) as a left G(R)-torsor under the coordinate action (ring planes).
VerifyReport torsor_verify_left(const AffPlaneModel& model);
/// omega of any finite affine plane as a right G(Tp)-torsor under the
/// translation-transport action.
VerifyReport torsor_verify_right(const AffineCtx& ctx, const TpRing& tp);
/// omega4(R) as a left H(R)-torsor (ring planes).
VerifyReport torsor_verify_H(const ProjPlaneModel& model);

}  // namespace ringplane
