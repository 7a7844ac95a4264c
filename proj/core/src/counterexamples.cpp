#include "ringplane/counterexamples.hpp"

#include "ringplane/affine.hpp"
#include "ringplane/linalg.hpp"
#include "ringplane/projective.hpp"
#include "ringplane/ring.hpp"

namespace ringplane {

std::vector<CounterexampleOutcome> run_counterexamples() {
  std::vector<CounterexampleOutcome> out;
  auto report = [&](int, const std::string& what, bool ok) {
    out.push_back(CounterexampleOutcome{what, ok});
  };
  {  // 1: two points of P(Z/4) on two common lines
    auto z4 = Ring::zmod(4);
    auto a = mk_proj_point(z4, 2, 2, 1), b = mk_proj_point(z4, 2, 0, 1);
    auto l = mk_proj_line(z4, 1, 0, 2), m = mk_proj_line(z4, 1, 2, 2);
    bool ok = incident(a, l) && incident(b, l) && incident(a, m) &&
              incident(b, m) && !(a == b) && !(l == m) && !pt_apart(a, b);
    report(1, "Z/4 distinct points on two distinct lines", ok);
  }
  {  // 2: neither on nor outside
    auto z4 = Ring::zmod(4);
    auto a = mk_proj_point(z4, 1, 0, 0), b = mk_proj_point(z4, 0, 2, 1);
    auto l = mk_proj_line(z4, 0, 1, 0);
    bool ok = incident(a, l) && pt_apart(a, b) && !incident(b, l) &&
              !outside(b, l);
    report(2, "Z/4 point neither on nor outside a line", ok);
  }
  {  // 3: Z/6 locality witness
    auto lc = Ring::zmod(6)->check_local();
    auto z6 = Ring::zmod(6);
    bool ok = !lc.local && lc.witness.has_value() &&
              lc.witness->first == z6->from_int(3) &&
              lc.witness->second == z6->from_int(2);
    report(3, "Z/6 locality fails at (3,2)", ok);
  }
  {  // 4: Z/6 frame matrix does not act
    auto z6 = Ring::zmod(6);
    Frame4 f{mk_proj_point(z6, 1, 0, 0), mk_proj_point(z6, 3, -1, 0),
             mk_proj_point(z6, 3, 2, 1), mk_proj_point(z6, 1, 1, 1)};
    bool threw = false;
    try {
      (void)frame_to_H(f);
    } catch (const Error&) {
      threw = true;
    }
    Mat3 m = mat3_from_columns(
        f.a.v, Vec3{z6->from_int(3), z6->from_int(-1), z6->from_int(0)}, f.o.v);
    Vec3 image = mat3_apply(
        m, Vec3{z6->from_int(3), z6->from_int(1), z6->from_int(2)});
    bool ok = general_position(f.a, f.b, f.o, f.i) && threw &&
              !image.x.invertible() && !image.y.invertible() &&
              !image.z.invertible();
    report(4, "Z/6 frame matrix breaks on (3,1,2)", ok);
  }
  {  // 5: Z/6 invertible matrix without a plane action
    auto z6 = Ring::zmod(6);
    Mat3 m = mat3_identity(z6);
    m.at(0, 0) = z6->from_int(3); m.at(0, 2) = z6->from_int(1);
    m.at(2, 0) = z6->from_int(2); m.at(2, 2) = z6->from_int(1);
    Vec3 image = mat3_apply(m, mk_proj_point(z6, 1, 0, 0).v);
    bool ok = det3(m).invertible() && !image.x.invertible() &&
              !image.y.invertible() && !image.z.invertible();
    report(5, "Z/6 matrix kills the point (1,0,0)", ok);
  }
  {  // 6: rational Desargues premise failure
    auto q = Ring::rational();
    auto res = desargues_check(
        mk_proj_point(q, 1, 0, 1), mk_proj_point(q, 0, 0, 1),
        mk_proj_point(q, 0, 1, 1), mk_proj_point(q, 1, 1, 1),
        mk_proj_line(q, 1, -2, 0), mk_proj_line(q, 2, 1, 0),
        mk_proj_line(q, -2, 1, 0), mk_proj_line(q, 2, 2, -3));
    bool ok = res.status == CheckStatus::PremisesFail &&
              res.detail == "B outside one of k,l,m" &&
              !delta_det(mk_proj_line(q, 2, 1, 0), mk_proj_line(q, 2, 2, -3),
                         mk_proj_point(q, 1, 0, 1), mk_proj_point(q, 0, 1, 1));
    report(6, "rational Desargues premises fail on B", ok);
  }
  {  // 7: apart non-parallel affine lines without an affine meet
    auto z4 = Ring::zmod(4);
    auto k = mk_proj_line(z4, 1, 0, 2), l = mk_proj_line(z4, 1, 2, 1);
    bool ok = li_apart(k, l) && !parallel(k, l) && !aff_meet(k, l).has_value() &&
              meet(k, l) == mk_proj_point(z4, 0, 1, 2);
    report(7, "Z/4 affine lines meet only at infinity", ok);
  }

  return out;
}

}  // namespace ringplane
