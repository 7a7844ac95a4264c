#include "doctest.h"
#include "ringplane/morphisms.hpp"
#include "ringplane/rng.hpp"

using namespace ringplane;

TEST_CASE("ring homomorphisms induce verified plane morphisms") {
  auto z4 = Ring::zmod(4);
  auto z2 = Ring::zmod(2);
  auto p4 = ProjPlaneModel::build(z4);
  auto p2 = ProjPlaneModel::build(z2);

  auto id = from_ring_hom_proj(RingHom::identity(z4), p4, p4);
  CHECK(id == identity_morphism(p4.fin));

  RingHom q = RingHom::all_homs(z4, z2)[0];
  auto phi = from_ring_hom_proj(q, p4, p2);
  CHECK(phi.pt_map.size() == 28);
  CHECK(verify_morphism(phi).all_pass());

  auto d2 = Ring::dual(2);
  auto pd = ProjPlaneModel::build(d2);
  RingHom incl = RingHom::all_homs(z2, d2)[0];
  CHECK(verify_morphism(from_ring_hom_proj(incl, p2, pd)).all_pass());

  // functoriality through the chain Z/4 -> Z/2 -> dual:2
  auto both = from_ring_hom_proj(incl.compose(q), p4, pd);
  CHECK(both == compose(from_ring_hom_proj(incl, p2, pd), phi));

  // affine counterpart
  auto a4 = AffPlaneModel::build(z4);
  auto a2 = AffPlaneModel::build(z2);
  CHECK(verify_morphism(from_ring_hom_aff(q, a4, a2)).all_pass());
}

TEST_CASE("matrix automorphisms act on the plane") {
  auto z4 = Ring::zmod(4);
  auto model = ProjPlaneModel::build(z4);
  CHECK(auto_from_H(ProjClassMatrix::identity(z4), model) ==
        identity_morphism(model.fin));

  Mat3 d311 = mat3_identity(z4);
  d311.at(0, 0) = z4->from_int(3);
  auto phi = auto_from_H(ProjClassMatrix::canonicalize(d311), model);
  CHECK(verify_isomorphism(phi).all_pass());

  auto am = AffPlaneModel::build(z4);
  Mat3 gmat = mat3_identity(z4);
  gmat.at(0, 2) = z4->from_int(1);  // translation by (1,0)
  auto psi = auto_from_G(AffMatrix(gmat), am);
  CHECK(verify_isomorphism(psi).all_pass());
  CHECK(psi.pt(am.point_index(mk_aff_point(z4, 0, 0))) ==
        am.point_index(mk_aff_point(z4, 1, 0)));
}

TEST_CASE("a matrix over Z/6 fails to act on the plane") {
  auto z6 = Ring::zmod(6);
  auto model = ProjPlaneModel::build(z6);
  Mat3 m = mat3_identity(z6);
  m.at(0, 0) = z6->from_int(3); m.at(0, 1) = z6->from_int(0); m.at(0, 2) = z6->from_int(1);
  m.at(1, 0) = z6->from_int(0); m.at(1, 1) = z6->from_int(1); m.at(1, 2) = z6->from_int(0);
  m.at(2, 0) = z6->from_int(2); m.at(2, 1) = z6->from_int(0); m.at(2, 2) = z6->from_int(1);
  REQUIRE(det3(m).invertible());
  CHECK_THROWS_WITH_AS((void)auto_from_H(ProjClassMatrix::canonicalize(m), model),
                       doctest::Contains("does not act on the plane"), Error);
  // the specific image of (1,0,0)
  Vec3 image = mat3_apply(m, mk_proj_point(z6, 1, 0, 0).v);
  CHECK(image.x == z6->from_int(3));
  CHECK(image.y == z6->from_int(0));
  CHECK(image.z == z6->from_int(2));
  CHECK_THROWS_AS((void)mk_proj_point(image), Error);
}

TEST_CASE("projective decomposition roundtrips through H(Z/2)") {
  auto z2 = Ring::zmod(2);
  auto model = ProjPlaneModel::build(z2);

  auto dec_id = decompose_proj(model, model, identity_morphism(model.fin));
  CHECK(dec_id.h == ProjClassMatrix::identity(z2));
  CHECK(dec_id.f == RingHom::identity(z2));

  for (const auto& h : enumerate_H(z2)) {
    auto phi = auto_from_H(h, model);
    auto dec = decompose_proj(model, model, phi);
    CHECK(dec.h == h);
    CHECK(dec.f == RingHom::identity(z2));
    // re-decomposition of the recomposition is bit-identical
    auto again = decompose_proj(
        model, model, compose(auto_from_H(dec.h, model),
                              from_ring_hom_proj(dec.f, model, model)));
    CHECK(again.h == dec.h);
    CHECK(again.f == dec.f);
  }
}

TEST_CASE("affine decomposition roundtrips through G(Z/2)") {
  auto z2 = Ring::zmod(2);
  auto model = AffPlaneModel::build(z2);
  for (const auto& g : enumerate_G(z2)) {
    auto phi = auto_from_G(g, model);
    auto dec = decompose_aff(model, model, phi);
    CHECK(dec.g == g);
    CHECK(dec.f == RingHom::identity(z2));
  }
}

TEST_CASE("decomposition across the quotient Z/4 to Z/2") {
  auto z4 = Ring::zmod(4);
  auto z2 = Ring::zmod(2);
  RingHom q = RingHom::all_homs(z4, z2)[0];
  {
    auto src = ProjPlaneModel::build(z4);
    auto dst = ProjPlaneModel::build(z2);
    Rng rng(31);
    auto H2 = enumerate_H(z2);
    for (int trial = 0; trial < 40; ++trial) {
      const auto& h = H2[std::size_t(rng.below(H2.size()))];
      auto phi = compose(auto_from_H(h, dst), from_ring_hom_proj(q, src, dst));
      auto dec = decompose_proj(src, dst, phi);
      CHECK(dec.h == h);
      CHECK(dec.f == q);
    }
  }
  {
    auto src = AffPlaneModel::build(z4);
    auto dst = AffPlaneModel::build(z2);
    Rng rng(32);
    auto G2 = enumerate_G(z2);
    for (int trial = 0; trial < 24; ++trial) {
      const auto& g = G2[std::size_t(rng.below(G2.size()))];
      auto phi = compose(auto_from_G(g, dst), from_ring_hom_aff(q, src, dst));
      auto dec = decompose_aff(src, dst, phi);
      CHECK(dec.g == g);
      CHECK(dec.f == q);
    }
  }
}

TEST_CASE("decomposition rejects non-local targets and broken maps") {
  auto z6 = Ring::zmod(6);
  auto m6 = ProjPlaneModel::build(z6);
  CHECK_THROWS_WITH_AS(
      (void)decompose_proj(m6, m6, identity_morphism(m6.fin)),
      doctest::Contains("must be local"), Error);

  auto z2 = Ring::zmod(2);
  auto m2 = ProjPlaneModel::build(z2);
  PlaneMorphism broken = identity_morphism(m2.fin);
  std::swap(broken.pt_map[0], broken.pt_map[1]);  // points moved, lines not
  CHECK_FALSE(verify_morphism(broken).all_pass());
  CHECK_THROWS_AS((void)decompose_proj(m2, m2, broken), Error);
}

TEST_CASE("verify_morphism catches a broken point map with a witness") {
  auto z2 = Ring::zmod(2);
  auto m2 = ProjPlaneModel::build(z2);
  PlaneMorphism broken = identity_morphism(m2.fin);
  std::swap(broken.pt_map[0], broken.pt_map[1]);
  auto rep = verify_morphism(broken);
  CHECK_FALSE(rep.all_pass());
  bool witnessed = false;
  for (const auto& a : rep.axioms)
    if (!a.pass && !a.witness.empty()) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("affine morphisms extend uniquely to the projective planes") {
  auto z2 = Ring::zmod(2);
  auto model = ProjPlaneModel::build(z2);
  int linf = model.line_index(mk_proj_line(z2, 0, 0, 1));
  DerivedAffine der = derive_affine(model.fin, linf);

  // identity extends to the identity
  PlaneMorphism id_aff = identity_morphism(der.plane);
  auto ext = extend_affine_to_projective(model.fin, model.fin, der, der, id_aff);
  CHECK(ext == identity_morphism(model.fin));

  // every automorphism fixing the chosen line restricts and re-extends to
  // itself
  int fixing = 0;
  for (const auto& h : enumerate_H(z2)) {
    auto psi = auto_from_H(h, model);
    if (psi.li(linf) != linf) continue;
    ++fixing;
    auto restricted = restrict_to_derived(psi, der, der);
    CHECK(verify_morphism(restricted).all_pass());
    auto back = extend_affine_to_projective(model.fin, model.fin, der, der,
                                            restricted);
    CHECK(back == psi);
  }
  CHECK(fixing == 24);  // the stabilizer of a line in H(Z/2)
}

TEST_CASE("an affine translation of A(Z/4) extends to the projective plane") {
  auto z4 = Ring::zmod(4);
  auto proj = ProjPlaneModel::build(z4);
  auto aff = AffPlaneModel::build(z4);
  int linf = proj.line_index(mk_proj_line(z4, 0, 0, 1));
  DerivedAffine der = derive_affine(proj.fin, linf);

  // carry the translation through the canonical derived = direct bijection
  Mat3 tr = mat3_identity(z4);
  tr.at(0, 2) = z4->from_int(1);
  auto tau = auto_from_G(AffMatrix(tr), aff);
  PlaneMorphism phi;
  phi.src = &der.plane;
  phi.dst = &der.plane;
  for (int dp : der.point_to_parent) {
    auto a = to_affine(proj.points[std::size_t(dp)]);
    int image = tau.pt(aff.point_index(*a));
    phi.pt_map.push_back(
        der.parent_point_to_derived[std::size_t(proj.point_index(
            embed(aff.points[std::size_t(image)])))]);
  }
  for (int dl : der.line_to_parent) {
    int image = tau.li(aff.line_index(proj.lines[std::size_t(dl)]));
    phi.li_map.push_back(der.parent_line_to_derived[std::size_t(
        proj.line_index(aff.lines[std::size_t(image)]))]);
  }
  REQUIRE(verify_morphism(phi).all_pass());

  auto psi = extend_affine_to_projective(proj.fin, proj.fin, der, der, phi);
  CHECK(verify_isomorphism(psi).all_pass());
  CHECK(psi.li(linf) == linf);
  // the extension restricts back to phi
  CHECK(restrict_to_derived(psi, der, der) == phi);
}

TEST_CASE("morphism files roundtrip") {
  auto z2 = Ring::zmod(2);
  auto model = ProjPlaneModel::build(z2);
  auto h = enumerate_H(z2)[17];
  auto phi = auto_from_H(h, model);
  std::string text = serialize_morphism(phi);
  PlaneMorphism back = parse_morphism(text, model.fin, model.fin);
  CHECK(back == phi);
  CHECK_THROWS_AS((void)parse_morphism("point 0 0\n", model.fin, model.fin),
                  Error);
  CHECK_THROWS_AS(
      (void)parse_morphism("morphism\npoint 0 99\n", model.fin, model.fin),
      Error);
}
