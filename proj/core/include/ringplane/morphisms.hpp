#pragma once

#include <string>
#include <vector>

#include "ringplane/affine.hpp"
#include "ringplane/axioms.hpp"
#include "ringplane/linalg.hpp"
#include "ringplane/projective.hpp"
#include "ringplane/synthetic.hpp"

namespace ringplane {

/// A plane morphism as index maps between two finite planes. The planes are
/// referenced, not owned.
struct PlaneMorphism {
  const FinitePlane* src = nullptr;
  const FinitePlane* dst = nullptr;
  std::vector<int> pt_map, li_map;

  int pt(int i) const { return pt_map[std::size_t(i)]; }
  int li(int i) const { return li_map[std::size_t(i)]; }
  bool operator==(const PlaneMorphism& o) const {
    return pt_map == o.pt_map && li_map == o.li_map;
  }
};

PlaneMorphism identity_morphism(const FinitePlane& p);
/// g after f.
PlaneMorphism compose(const PlaneMorphism& g, const PlaneMorphism& f);
/// Inverse of a bijective morphism.
PlaneMorphism inverse_morphism(const PlaneMorphism& m);

/// Exhaustive structure check: preservation of both apartness relations, of
/// incidence and non-incidence (and parallelism for affine planes), plus the
/// join-of-images property that pins the line map to the point map.
VerifyReport verify_morphism(const PlaneMorphism& m);
/// verify_morphism both ways plus bijectivity.
VerifyReport verify_isomorphism(const PlaneMorphism& m);

/// The morphism P(R) -> P(S) induced by a ring homomorphism, componentwise on
/// canonical representatives.
PlaneMorphism from_ring_hom_proj(const RingHom& f, const ProjPlaneModel& src,
                                 const ProjPlaneModel& dst);
PlaneMorphism from_ring_hom_aff(const RingHom& f, const AffPlaneModel& src,
                                const AffPlaneModel& dst);

/// The automorphism of P(R) induced by an element of H(R): points by M, lines
/// by the inverse transpose. Over a non-local ring the matrix can fail to act;
/// that raises an Error naming the broken image.
PlaneMorphism auto_from_H(const ProjClassMatrix& h, const ProjPlaneModel& m);
PlaneMorphism auto_from_G(const AffMatrix& g, const AffPlaneModel& m);

struct ProjDecomposition {
  ProjClassMatrix h;
  RingHom f;
};
/// Writes a verified morphism P(R) -> P(S), S local, uniquely as h . P(f).
/// Throws when the recomposition disagrees with the input (which certifies
/// the input was not a plane morphism).
ProjDecomposition decompose_proj(const ProjPlaneModel& src,
                                 const ProjPlaneModel& dst,
                                 const PlaneMorphism& m);

struct AffDecomposition {
  AffMatrix g;
  RingHom f;
};
AffDecomposition decompose_aff(const AffPlaneModel& src,
                               const AffPlaneModel& dst,
                               const PlaneMorphism& m);

/// Unique extension of a morphism between derived affine planes to the
/// projective planes: each point goes to the meet of the images of two lines
/// through it (chosen enumeration-first apart from each other and from the
/// line at infinity).
PlaneMorphism extend_affine_to_projective(const FinitePlane& proj_src,
                                          const FinitePlane& proj_dst,
                                          const DerivedAffine& der_src,
                                          const DerivedAffine& der_dst,
                                          const PlaneMorphism& phi);

/// Restriction of a projective morphism fixing the chosen lines to the
/// derived affine planes.
PlaneMorphism restrict_to_derived(const PlaneMorphism& psi,
                                  const DerivedAffine& der_src,
                                  const DerivedAffine& der_dst);

/// Line-based morphism file format: "morphism" header, then "point i j" and
/// "line i j" rows.
PlaneMorphism parse_morphism(const std::string& text, const FinitePlane& src,
                             const FinitePlane& dst);
std::string serialize_morphism(const PlaneMorphism& m);

}  // namespace ringplane
