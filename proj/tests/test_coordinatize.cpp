#include "doctest.h"
#include "ringplane/coordinatize.hpp"
#include "ringplane/rng.hpp"

using namespace ringplane;

namespace {

struct Fixture {
  AffPlaneModel model;
  AffineCtx ctx;
  explicit Fixture(const char* desc)
      : model(AffPlaneModel::build(Ring::parse(desc))), ctx(model.fin) {}
  int pt(std::int64_t x, std::int64_t y) const {
    return model.point_index(mk_aff_point(model.ring, x, y));
  }
  std::pair<std::int64_t, std::int64_t> coords(int i) const {
    // only for zmod carriers
    const AffPoint& p = model.points[std::size_t(i)];
    return {std::int64_t(model.ring->index(p.x)),
            std::int64_t(model.ring->index(p.y))};
  }
};

}  // namespace

TEST_CASE("translations move points by a fixed vector") {
  Fixture f("zmod:3");
  // tau (0,0)->(1,0) acts as x+1 on all nine points
  Translation t{f.pt(0, 0), f.pt(1, 0)};
  for (int i = 0; i < f.model.fin.np; ++i) {
    auto [x, y] = f.coords(i);
    CHECK(translation_apply(f.ctx, t, i) == f.pt((x + 1) % 3, y));
  }
  // identity translation
  Translation id{f.pt(1, 2), f.pt(1, 2)};
  for (int i = 0; i < f.model.fin.np; ++i)
    CHECK(translation_apply(f.ctx, id, i) == i);
}

TEST_CASE("translation with a non-apart displacement uses the composite route") {
  Fixture f("zmod:4");
  // (0,0) and (2,0) are not apart; the translation still exists and matches
  // the matrix oracle x -> x + 2
  Translation t{f.pt(0, 0), f.pt(2, 0)};
  REQUIRE_FALSE(f.model.fin.pt_apart(f.pt(0, 0), f.pt(2, 0)));
  CHECK(translation_apply(f.ctx, t, f.pt(1, 1)) == f.pt(3, 1));
  for (int i = 0; i < f.model.fin.np; ++i) {
    auto [x, y] = f.coords(i);
    CHECK(translation_apply(f.ctx, t, i) == f.pt((x + 2) % 4, y));
  }
}

TEST_CASE("translations against the matrix oracle, all of A(Z/4) and A(dual:2)") {
  for (const char* desc : {"zmod:4", "dual:2"}) {
    Fixture f(desc);
    const auto& R = f.model.ring;
    for (const auto& src : f.model.points)
      for (const auto& dst : f.model.points) {
        Translation t{f.model.point_index(src), f.model.point_index(dst)};
        RingValue dx = dst.x - src.x, dy = dst.y - src.y;
        for (int i = 0; i < f.model.fin.np; ++i) {
          const AffPoint& p = f.model.points[std::size_t(i)];
          int expect = f.model.point_index(AffPoint{p.x + dx, p.y + dy});
          CHECK(translation_apply(f.ctx, t, i) == expect);
        }
        (void)R;
      }
  }
}

TEST_CASE("translation group structure") {
  for (const char* desc : {"zmod:2", "zmod:3", "zmod:4"}) {
    Fixture f(desc);
    const int n = f.model.fin.np;
    const int base = f.ctx.base_a();
    // translations are in bijection with points via the action on the base
    std::vector<Translation> group;
    for (int d = 0; d < n; ++d) group.push_back(Translation{base, d});
    for (const auto& t1 : group) {
      // inverse
      Translation inv = translation_inverse(f.ctx, t1);
      CHECK(translation_eq(f.ctx, translation_compose(f.ctx, t1, inv),
                           Translation{base, base}));
      for (const auto& t2 : group) {
        // commutativity and closure
        Translation a = translation_compose(f.ctx, t1, t2);
        Translation b = translation_compose(f.ctx, t2, t1);
        CHECK(translation_eq(f.ctx, a, b));
        // uniqueness: agreeing at the base means agreeing everywhere
        for (int p = 0; p < n; ++p)
          CHECK(translation_apply(f.ctx, a, p) ==
                translation_apply(f.ctx, b, p));
      }
    }
  }
}

TEST_CASE("translation transfer properties between base points") {
  Fixture f("zmod:4");
  const int n = f.model.fin.np;
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Translation t1{int(rng.below(std::uint64_t(n))), int(rng.below(std::uint64_t(n)))};
    Translation t2{int(rng.below(std::uint64_t(n))), int(rng.below(std::uint64_t(n)))};
    int a = int(rng.below(std::uint64_t(n)));
    int b = int(rng.below(std::uint64_t(n)));
    bool eq_at_a = translation_apply(f.ctx, t1, a) == translation_apply(f.ctx, t2, a);
    bool eq_at_b = translation_apply(f.ctx, t1, b) == translation_apply(f.ctx, t2, b);
    CHECK(eq_at_a == eq_at_b);
    bool ap_at_a = f.model.fin.pt_apart(translation_apply(f.ctx, t1, a),
                                        translation_apply(f.ctx, t2, a));
    bool ap_at_b = f.model.fin.pt_apart(translation_apply(f.ctx, t1, b),
                                        translation_apply(f.ctx, t2, b));
    CHECK(ap_at_a == ap_at_b);
  }
}

TEST_CASE("dilatations with a fixed point match the scalar oracle") {
  {
    Fixture f("zmod:5");
    auto d = Dilatation::from_fixed(f.ctx, f.pt(0, 0), f.pt(1, 0), f.pt(3, 0));
    CHECK(d.apply(f.ctx, f.pt(1, 1)) == f.pt(3, 3));
    for (int i = 0; i < f.model.fin.np; ++i) {
      auto [x, y] = f.coords(i);
      CHECK(d.apply(f.ctx, i) == f.pt((3 * x) % 5, (3 * y) % 5));
    }
  }
  {
    Fixture f("zmod:4");
    auto d = Dilatation::from_fixed(f.ctx, f.pt(0, 0), f.pt(1, 0), f.pt(3, 0));
    CHECK(d.apply(f.ctx, f.pt(2, 1)) == f.pt(2, 3));
  }
  {
    // identity dilatation when the images coincide
    Fixture f("zmod:3");
    auto d = Dilatation::from_fixed(f.ctx, f.pt(0, 0), f.pt(1, 0), f.pt(1, 0));
    for (int i = 0; i < f.model.fin.np; ++i) CHECK(d.apply(f.ctx, i) == i);
  }
}

TEST_CASE("dilatations from two points, general affine oracle") {
  Fixture f("zmod:5");
  // x -> 2x + (1,2) as a dilatation determined by two images
  auto d = Dilatation::from_two_points(f.ctx, f.pt(0, 0), f.pt(1, 0),
                                       f.pt(1, 2), f.pt(3, 2));
  for (int i = 0; i < f.model.fin.np; ++i) {
    auto [x, y] = f.coords(i);
    CHECK(d.apply(f.ctx, i) == f.pt((2 * x + 1) % 5, (2 * y + 2) % 5));
  }
  CHECK_THROWS_AS((void)Dilatation::from_fixed(f.ctx, f.pt(0, 0), f.pt(1, 0),
                                               f.pt(1, 1)),
                  Error);  // image off the line
}

TEST_CASE("dilatation uniqueness and normality of translations") {
  Fixture f("zmod:3");
  const int n = f.model.fin.np;
  // all dilatations with the given fixed data agree everywhere when they
  // agree on two apart points
  auto d1 = Dilatation::from_two_points(f.ctx, f.pt(0, 0), f.pt(1, 0),
                                        f.pt(1, 1), f.pt(0, 1));
  auto d2 = Dilatation::from_two_points(f.ctx, f.pt(0, 1), f.pt(2, 1),
                                        d1.apply(f.ctx, f.pt(0, 1)),
                                        d1.apply(f.ctx, f.pt(2, 1)));
  for (int i = 0; i < n; ++i) CHECK(d1.apply(f.ctx, i) == d2.apply(f.ctx, i));

  // sigma tau sigma^-1 is a translation whose displacement stays on the trace
  for (int q2x = 1; q2x < 3; ++q2x) {
    auto sigma = Dilatation::from_fixed(f.ctx, f.pt(0, 0), f.pt(1, 0),
                                        f.pt(q2x, 0));
    auto sigma_inv = Dilatation::from_two_points(
        f.ctx, sigma.apply(f.ctx, f.pt(0, 0)), sigma.apply(f.ctx, f.pt(1, 0)),
        f.pt(0, 0), f.pt(1, 0));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (!f.model.fin.pt_apart(p, q)) continue;
        Translation tau{p, q};
        // conjugate, evaluated as a map
        auto conj = [&](int x) {
          return sigma.apply(
              f.ctx, translation_apply(f.ctx, tau, sigma_inv.apply(f.ctx, x)));
        };
        Translation as_translation{0, conj(0)};
        for (int x = 0; x < n; ++x)
          CHECK(translation_apply(f.ctx, as_translation, x) == conj(x));
        // and sigma tau_PQ sigma^-1 (P) lies on PQ
        CHECK(f.model.fin.in(conj(p), f.ctx.join(p, q)));
      }
  }
}

TEST_CASE("trace preserving homomorphisms act as ring scalars") {
  Fixture f("zmod:4");
  // alpha = (0,0),(1,0),(2,0) is multiplication by 2 on translations
  TpElement alpha{f.pt(0, 0), f.pt(1, 0), f.pt(2, 0)};
  Translation up{f.pt(0, 0), f.pt(0, 1)};
  Translation image = tp_apply(f.ctx, alpha, up);
  CHECK(translation_apply(f.ctx, image, f.pt(0, 0)) == f.pt(0, 2));

  // identity and zero
  TpElement one{f.pt(0, 0), f.pt(1, 0), f.pt(1, 0)};
  TpElement zero{f.pt(0, 0), f.pt(1, 0), f.pt(0, 0)};
  for (int d = 0; d < f.model.fin.np; ++d) {
    Translation t{f.pt(0, 0), d};
    CHECK(translation_eq(f.ctx, tp_apply(f.ctx, one, t), t));
    Translation z = tp_apply(f.ctx, zero, t);
    CHECK(translation_apply(f.ctx, z, f.pt(2, 2)) == f.pt(2, 2));
  }

  // trace preservation: the image target stays on the trace line
  const int n = f.model.fin.np;
  for (int c = 0; c < n; ++c) {
    if (!f.model.fin.in(c, f.ctx.join(f.pt(0, 0), f.pt(1, 0)))) continue;
    TpElement a{f.pt(0, 0), f.pt(1, 0), c};
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (!f.model.fin.pt_apart(p, q)) continue;
        Translation t{p, q};
        int target = translation_apply(f.ctx, tp_apply(f.ctx, a, t), p);
        CHECK(f.model.fin.in(target, f.ctx.join(p, q)));
      }
  }
}

TEST_CASE("tp arithmetic over A(Z/4)") {
  Fixture f("zmod:4");
  TpElement alpha{f.pt(0, 0), f.pt(1, 0), f.pt(2, 0)};  // scalar 2
  CHECK_FALSE(tp_is_invertible(f.ctx, alpha));
  CHECK(tp_is_invertible(f.ctx, tp_add(f.ctx, alpha, tp_one(f.ctx))));
  CHECK_THROWS_AS((void)tp_inverse(f.ctx, alpha), Error);

  // 2 + 2 = 0 and 2 * 2 = 0 in Z/4
  CHECK(tp_eq(f.ctx, tp_add(f.ctx, alpha, alpha), tp_zero(f.ctx)));
  CHECK(tp_eq(f.ctx, tp_mul(f.ctx, alpha, alpha), tp_zero(f.ctx)));

  TpElement three{f.pt(0, 0), f.pt(1, 0), f.pt(3, 0)};
  CHECK(tp_is_invertible(f.ctx, three));
  CHECK(tp_eq(f.ctx, tp_mul(f.ctx, three, three), tp_one(f.ctx)));
  CHECK(tp_eq(f.ctx, tp_inverse(f.ctx, three), three));
  CHECK(tp_eq(f.ctx, tp_neg(f.ctx, tp_one(f.ctx)), three));
}

TEST_CASE("tp_add of one and one vanishes in characteristic two") {
  Fixture f("zmod:2");
  CHECK(tp_eq(f.ctx, tp_add(f.ctx, tp_one(f.ctx), tp_one(f.ctx)),
              tp_zero(f.ctx)));
}

TEST_CASE("tp unit laws and inverses, exhaustively over A(Z/3)") {
  Fixture f("zmod:3");
  TpRing tp = build_tp_ring(f.ctx);
  for (const auto& a : tp.elems) {
    CHECK(tp_eq(f.ctx, tp_mul(f.ctx, a, tp_one(f.ctx)), a));
    CHECK(tp_eq(f.ctx, tp_mul(f.ctx, tp_one(f.ctx), a), a));
    if (tp_is_invertible(f.ctx, a))
      CHECK(tp_eq(f.ctx, tp_mul(f.ctx, a, tp_inverse(f.ctx, a)), tp_one(f.ctx)));
  }
}

TEST_CASE("the reconstructed ring matches the coordinate ring") {
  // search for a bijection fixing 0 and 1 that carries the tables onto the
  // reference ring
  auto tables_isomorphic = [](const RingPtr& a, const RingPtr& b) {
    if (a->size() != b->size()) return false;
    auto ea = a->enumerate(), eb = b->enumerate();
    const std::size_t n = ea.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end());
    do {
      bool ok = true;
      auto f = [&](const RingValue& v) { return eb[perm[a->index(v)]]; };
      if (!(f(a->zero()) == b->zero()) || !(f(a->one()) == b->one())) continue;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j) {
          if (!(f(a->add(ea[i], ea[j])) == b->add(f(ea[i]), f(ea[j])))) ok = false;
          if (!(f(a->mul(ea[i], ea[j])) == b->mul(f(ea[i]), f(ea[j])))) ok = false;
        }
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };

  for (const char* desc : {"zmod:2", "zmod:3", "zmod:4", "dual:2"}) {
    Fixture f(desc);
    TpRing tp = build_tp_ring(f.ctx);
    CHECK(tp.ring->size() == f.model.ring->size());
    CHECK(tp.ring->check_local().local);
    CHECK(tables_isomorphic(tp.ring, f.model.ring));
  }

  // dual:2 is distinguished from Z/4 by its squares: Tp(A(dual:2)) has a
  // nonzero nilpotent but no element squaring to -1-like behaviour; the table
  // search must fail against the wrong reference
  Fixture fd("dual:2");
  TpRing tpd = build_tp_ring(fd.ctx);
  CHECK_FALSE(tables_isomorphic(tpd.ring, Ring::zmod(4)));
  std::size_t nilpotents = 0;
  for (const auto& x : tpd.ring->enumerate())
    if (!(x == tpd.ring->zero()) && x * x == tpd.ring->zero()) ++nilpotents;
  CHECK(nilpotents == 1);
}

TEST_CASE("coordinate map is a verified plane isomorphism") {
  for (const char* desc : {"zmod:2", "zmod:3", "zmod:4", "dual:2"}) {
    Fixture f(desc);
    TpRing tp = build_tp_ring(f.ctx);
    int o = f.pt(0, 0), x = f.pt(1, 0), y = f.pt(0, 1);
    CoordMap cm = coord_map(f.ctx, tp, x, y, o);

    // frame images as in the theorem
    const RingPtr& R = tp.ring;
    CHECK(cm.fwd_pt[std::size_t(cm.model->point_index(
              AffPoint{R->zero(), R->zero()}))] == o);
    CHECK(cm.fwd_pt[std::size_t(cm.model->point_index(
              AffPoint{R->one(), R->zero()}))] == x);
    CHECK(cm.fwd_pt[std::size_t(cm.model->point_index(
              AffPoint{R->zero(), R->one()}))] == y);

    PlaneMorphism iso;
    iso.src = &cm.model->fin;
    iso.dst = &f.model.fin;
    iso.pt_map = cm.fwd_pt;
    iso.li_map = cm.fwd_li;
    CHECK(verify_isomorphism(iso).all_pass());

    // roundtrip through coord_inverse on every point
    for (int p = 0; p < f.model.fin.np; ++p) {
      auto [alpha, beta] = coord_inverse(f.ctx, x, y, o, p);
      AffPoint coords{tp.value_of(f.ctx, alpha), tp.value_of(f.ctx, beta)};
      CHECK(cm.fwd_pt[std::size_t(cm.model->point_index(coords))] == p);
    }
  }
}

TEST_CASE("coordinate map with the canonical frame is the identity on A(Z/3)") {
  Fixture f("zmod:3");
  TpRing tp = build_tp_ring(f.ctx);
  CoordMap cm = coord_map(f.ctx, tp, f.pt(1, 0), f.pt(0, 1), f.pt(0, 0));
  // under the canonical bijection Tp = Z/3 the map fixes every coordinate pair
  for (int i = 0; i < f.model.fin.np; ++i) {
    const AffPoint& p = cm.model->points[std::size_t(i)];
    int expect = f.pt(std::int64_t(tp.ring->index(p.x)),
                      std::int64_t(tp.ring->index(p.y)));
    CHECK(cm.fwd_pt[std::size_t(i)] == expect);
  }
}

TEST_CASE("five point desargues variant on a dilatation image over Z/5") {
  Fixture f("zmod:5");
  const FinitePlane& p = f.model.fin;
  const PlaneGeometry& g = f.ctx.geom();
  int pp = f.pt(0, 0);
  auto sigma = Dilatation::from_fixed(f.ctx, pp, f.pt(1, 0), f.pt(2, 0));
  int a = f.pt(1, 0), b = f.pt(0, 1), c = f.pt(1, 1), d = f.pt(3, 2);
  int a2 = sigma.apply(f.ctx, a), b2 = sigma.apply(f.ctx, b),
      c2 = sigma.apply(f.ctx, c), d2 = sigma.apply(f.ctx, d);
  int k = f.ctx.join(pp, a), l = f.ctx.join(pp, b), m = f.ctx.join(pp, c);
  auto res = desargues_variant_check(p, g, DesarguesVariant::FivePoint,
                                     {pp, a, a2, b, b2, c, c2, d, d2},
                                     {k, l, m});
  CHECK(res.status == CheckStatus::Holds);

  // premise failure: P moved off the lines
  auto bad = desargues_variant_check(p, g, DesarguesVariant::FivePoint,
                                     {f.pt(4, 4), a, a2, b, b2, c, c2, d, d2},
                                     {k, l, m});
  CHECK(bad.status == CheckStatus::PremisesFail);
  CHECK(bad.detail == "P on k,l,m");
}

TEST_CASE("left G torsor on omega for ring planes") {
  {
    auto model = AffPlaneModel::build(Ring::zmod(2));
    PlaneGeometry g(model.fin);
    CHECK(enumerate_omega(model.fin, g).size() == 24);
    auto rep = torsor_verify_left(model);
    CHECK(rep.all_pass());
  }
  {
    auto model = AffPlaneModel::build(Ring::zmod(3));
    PlaneGeometry g(model.fin);
    CHECK(enumerate_omega(model.fin, g).size() == 432);
    auto rep = torsor_verify_left(model);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("right G(Tp) torsor on omega") {
  for (const char* desc : {"zmod:2", "zmod:3"}) {
    Fixture f(desc);
    TpRing tp = build_tp_ring(f.ctx);
    auto rep = torsor_verify_right(f.ctx, tp);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("H torsor on omega4") {
  {
    auto model = ProjPlaneModel::build(Ring::zmod(2));
    PlaneGeometry g(model.fin);
    CHECK(enumerate_omega4(model.fin, g).size() == 168);
    auto rep = torsor_verify_H(model);
    CHECK(rep.all_pass());
    for (const auto& a : rep.axioms) CHECK(a.mode == "exhaustive");
  }
  {
    auto model = ProjPlaneModel::build(Ring::zmod(3));
    PlaneGeometry g(model.fin);
    CHECK(enumerate_omega4(model.fin, g).size() == 5616);
    CHECK(enumerate_H(Ring::zmod(3)).size() == 5616);
    auto rep = torsor_verify_H(model);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("projective coordinatization of P(Z/2) with the standard frame") {
  auto model = ProjPlaneModel::build(Ring::zmod(2));
  const RingPtr& R = model.ring;
  int a = model.point_index(mk_proj_point(R, 1, 0, 0));
  int b = model.point_index(mk_proj_point(R, 0, 1, 0));
  int o = model.point_index(mk_proj_point(R, 0, 0, 1));
  int i = model.point_index(mk_proj_point(R, 1, 1, 1));
  auto pc = proj_coordinatize(model.fin, a, b, o, i);
  CHECK(pc.tp.ring->size() == 2);
  CHECK(verify_isomorphism(pc.iso).all_pass());
  // with Tp = Z/2 the isomorphism is the identity on the 7 points
  for (int p = 0; p < 7; ++p) {
    // compare coordinates through the canonical carrier identification
    const ProjPoint& q = pc.model->points[std::size_t(p)];
    ProjPoint mapped = mk_proj_point(
        R, std::int64_t(pc.tp.ring->index(q.v.x)),
        std::int64_t(pc.tp.ring->index(q.v.y)),
        std::int64_t(pc.tp.ring->index(q.v.z)));
    CHECK(pc.iso.pt(p) == model.point_index(mapped));
  }
}
