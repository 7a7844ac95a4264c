#include "ringplane/projective.hpp"

#include <algorithm>

namespace ringplane {

namespace {

Vec3 canonical_triple(const Vec3& v) {
  const RingValue* coords[3] = {&v.x, &v.y, &v.z};
  for (auto* c : coords) {
    if (auto inv = c->inverse()) {
      return Vec3{*inv * v.x, *inv * v.y, *inv * v.z};
    }
  }
  throw Error("no invertible coordinate: (" + v.x.str() + "," + v.y.str() +
              "," + v.z.str() + ") is not an element of the plane");
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
              a.x * b.y - a.y * b.x};
}

bool triples_apart(const Vec3& a, const Vec3& b) {
  return (a.x * b.y - a.y * b.x).invertible() ||
         (a.y * b.z - a.z * b.y).invertible() ||
         (a.x * b.z - a.z * b.x).invertible();
}

RingValue dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

std::string triple_str(const Vec3& v) {
  return "(" + v.x.str() + "," + v.y.str() + "," + v.z.str() + ")";
}

}  // namespace

std::string ProjPoint::str() const { return triple_str(v); }
std::string ProjLine::str() const { return triple_str(v); }

ProjPoint mk_proj_point(const Vec3& v) { return ProjPoint{canonical_triple(v)}; }
ProjLine mk_proj_line(const Vec3& v) { return ProjLine{canonical_triple(v)}; }

ProjPoint mk_proj_point(const RingPtr& r, std::int64_t a, std::int64_t b,
                        std::int64_t c) {
  return mk_proj_point(Vec3{r->from_int(a), r->from_int(b), r->from_int(c)});
}
ProjLine mk_proj_line(const RingPtr& r, std::int64_t a, std::int64_t b,
                      std::int64_t c) {
  return mk_proj_line(Vec3{r->from_int(a), r->from_int(b), r->from_int(c)});
}

bool pt_apart(const ProjPoint& a, const ProjPoint& b) {
  return triples_apart(a.v, b.v);
}
bool li_apart(const ProjLine& k, const ProjLine& l) {
  return triples_apart(k.v, l.v);
}
bool incident(const ProjPoint& a, const ProjLine& l) {
  return dot(a.v, l.v) == a.v.ring()->zero();
}
bool outside(const ProjPoint& a, const ProjLine& l) {
  return dot(a.v, l.v).invertible();
}

ProjLine line_through(const ProjPoint& a, const ProjPoint& b) {
  if (!pt_apart(a, b)) throw Error("line_through: points not apart");
  return mk_proj_line(cross(a.v, b.v));
}

ProjPoint meet(const ProjLine& k, const ProjLine& l) {
  if (!li_apart(k, l)) throw Error("meet: lines not apart");
  return mk_proj_point(cross(k.v, l.v));
}

ProjLine dualize(const ProjPoint& a) { return ProjLine{a.v}; }
ProjPoint dualize(const ProjLine& l) { return ProjPoint{l.v}; }

RingValue collinear_det(const ProjPoint& a, const ProjPoint& b,
                        const ProjPoint& c) {
  return det3(mat3_from_columns(a.v, b.v, c.v));
}

bool is_collinear_with(const ProjPoint& a, const ProjPoint& b,
                       const ProjPoint& c) {
  if (!pt_apart(a, b)) throw Error("is_collinear_with: points not apart");
  return collinear_det(a, b, c) == a.v.ring()->zero();
}

bool non_collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  // two-condition form: b # c and a outside bc
  if (!pt_apart(b, c)) return false;
  return outside(a, line_through(b, c));
}

bool non_concurrent(const ProjLine& k, const ProjLine& l, const ProjLine& m) {
  if (!li_apart(l, m)) return false;
  return outside(meet(l, m), k);
}

bool general_position(const ProjPoint& a, const ProjPoint& b,
                      const ProjPoint& o, const ProjPoint& i) {
  return non_collinear(a, b, o) && non_collinear(a, b, i) &&
         non_collinear(a, o, i) && non_collinear(b, o, i);
}

// ---- delta -------------------------------------------------------------------

bool delta_side_conditions(const ProjLine& k, const ProjLine& l,
                           const ProjPoint& a, const ProjPoint& b) {
  // the lemma's hypotheses, extended by the doubly diagonal case where the
  // criterion value is identically zero and delta(k,k,A,A) always holds
  if (!li_apart(k, l) && !pt_apart(a, b) && !(a == b && k == l)) return false;
  return outside(a, k) || outside(a, l) || outside(b, k) || outside(b, l);
}

bool delta_det(const ProjLine& k, const ProjLine& l, const ProjPoint& a,
               const ProjPoint& b) {
  if (!delta_side_conditions(k, l, a, b))
    throw Error("delta_det: side conditions unmet");
  RingValue ka = dot(k.v, a.v), kb = dot(k.v, b.v);
  RingValue la = dot(l.v, a.v), lb = dot(l.v, b.v);
  return ka * lb - kb * la == a.v.ring()->zero();
}

std::optional<DeltaWitness> delta_search(const ProjLine& k, const ProjLine& l,
                                         const ProjPoint& a,
                                         const ProjPoint& b) {
  const auto& ring = a.v.ring();
  if (!ring->finite()) throw Error("delta_search requires a finite ring");
  auto pts = enumerate_proj_points(ring);
  for (const auto& rpt : pts) {
    ProjLine r = dualize(rpt);
    if (!incident(a, r) || !incident(b, r)) continue;
    for (const auto& x : pts) {
      if (incident(x, r) && incident(x, k) && incident(x, l))
        return DeltaWitness{r, x};
    }
  }
  return std::nullopt;
}

bool delta(const ProjLine& k, const ProjLine& l, const ProjPoint& a,
           const ProjPoint& b) {
  if (delta_side_conditions(k, l, a, b)) return delta_det(k, l, a, b);
  if (a.v.ring()->finite()) return delta_search(k, l, a, b).has_value();
  throw Error("delta undecidable: infinite ring without side conditions");
}

// ---- checkers ----------------------------------------------------------------

CheckResult desargues_check(const ProjPoint& a, const ProjPoint& b,
                            const ProjPoint& c, const ProjPoint& d,
                            const ProjLine& k, const ProjLine& l,
                            const ProjLine& m, const ProjLine& n) {
  auto fail = [](const char* what) {
    return CheckResult{CheckStatus::PremisesFail, what};
  };
  if (!delta(k, l, a, b)) return fail("delta(k,l,A,B)");
  if (!delta(l, m, b, c)) return fail("delta(l,m,B,C)");
  if (!delta(m, n, c, d)) return fail("delta(m,n,C,D)");
  if (!delta(n, k, d, a)) return fail("delta(n,k,D,A)");
  if (!delta(k, m, b, d)) return fail("delta(k,m,B,D)");
  if (!(li_apart(l, n) || pt_apart(a, c))) return fail("l#n or A#C");
  if (!(outside(a, l) || outside(a, n) || outside(c, l) || outside(c, n)))
    return fail("A or C outside one of l,n");
  if (!(outside(b, k) || outside(b, l) || outside(b, m)))
    return fail("B outside one of k,l,m");
  if (!(outside(d, m) || outside(d, n) || outside(d, k)))
    return fail("D outside one of m,n,k");
  if (!(outside(d, k) || outside(a, k) || outside(b, k)))
    return fail("one of D,A,B outside k");
  if (!(outside(b, m) || outside(c, m) || outside(d, m)))
    return fail("one of B,C,D outside m");
  return delta(l, n, a, c) ? CheckResult{CheckStatus::Holds, ""}
                           : CheckResult{CheckStatus::Violated,
                                         "delta(l,n,A,C) fails"};
}

CheckResult pappus_check(const std::array<ProjPoint, 6>& p,
                         const std::array<ProjLine, 6>& k) {
  auto fail = [](const std::string& what) {
    return CheckResult{CheckStatus::PremisesFail, what};
  };
  // hexagon incidences: p = (A,B,C,D,E,F), k = (kA,kB,kC,kD,kE,kF)
  static const char* names[6] = {"A,B on k_A", "B,C on k_B", "C,D on k_C",
                                 "D,E on k_D", "E,F on k_E", "F,A on k_F"};
  for (int i = 0; i < 6; ++i) {
    if (!incident(p[std::size_t(i)], k[std::size_t(i)]) ||
        !incident(p[std::size_t((i + 1) % 6)], k[std::size_t(i)]))
      return fail(names[i]);
  }
  if (!delta(k[2], k[5], p[1], p[4])) return fail("delta(k_C,k_F,B,E)");
  if (!delta(k[1], k[4], p[0], p[3])) return fail("delta(k_B,k_E,A,D)");
  bool pts_ap = pt_apart(p[0], p[1]) && pt_apart(p[3], p[4]);
  bool lis_ap = li_apart(k[1], k[2]) && li_apart(k[4], k[5]);
  if (!pts_ap && !lis_ap) return fail("(A#B and D#E) or (k_B#k_C and k_E#k_F)");
  if (!(li_apart(k[0], k[3]) || pt_apart(p[5], p[2])))
    return fail("k_A#k_D or F#C");
  if (!(outside(p[2], k[0]) || outside(p[2], k[3]) || outside(p[5], k[0]) ||
        outside(p[5], k[3])))
    return fail("C or F outside one of k_A,k_D");
  return delta(k[0], k[3], p[5], p[2])
             ? CheckResult{CheckStatus::Holds, ""}
             : CheckResult{CheckStatus::Violated, "delta(k_A,k_D,F,C) fails"};
}

// ---- frame_to_H --------------------------------------------------------------

ProjClassMatrix frame_to_H(const Frame4& f) {
  if (!general_position(f.a, f.b, f.o, f.i))
    throw Error("frame_to_H: frame not in general position");
  Mat3 cols = mat3_from_columns(f.a.v, f.b.v, f.o.v);
  if (!det3(cols).invertible())
    throw Error("frame_to_H: frame matrix not invertible");
  Vec3 w = mat3_apply(inverse3(cols), f.i.v);
  if (!w.x.invertible() || !w.y.invertible() || !w.z.invertible())
    throw Error("frame_to_H: scaling factors not all invertible");
  Mat3 m = mat3_from_columns(Vec3{w.x * f.a.v.x, w.x * f.a.v.y, w.x * f.a.v.z},
                             Vec3{w.y * f.b.v.x, w.y * f.b.v.y, w.y * f.b.v.z},
                             Vec3{w.z * f.o.v.x, w.z * f.o.v.y, w.z * f.o.v.z});
  auto h = ProjClassMatrix::canonicalize(m);
  const auto& ring = f.a.v.ring();
  if (ring->finite()) {
    // over a non-local ring the matrix may fail to act on the plane
    for (const auto& p : enumerate_proj_points(ring)) {
      Vec3 image = mat3_apply(m, p.v);
      if (!image.x.invertible() && !image.y.invertible() &&
          !image.z.invertible())
        throw Error("frame_to_H: matrix does not act on the plane, point " +
                    p.str() + " maps to " + triple_str(image));
    }
  }
  return h;
}

// ---- plane model -------------------------------------------------------------

std::vector<ProjPoint> enumerate_proj_points(const RingPtr& r) {
  if (!r->finite()) throw Error("cannot enumerate an infinite plane");
  auto elems = r->enumerate();
  std::vector<ProjPoint> out;
  for (const auto& x : elems)
    for (const auto& y : elems)
      for (const auto& z : elems) {
        // canonical iff the first invertible coordinate equals 1
        const RingValue* c[3] = {&x, &y, &z};
        int first = -1;
        for (int i = 0; i < 3 && first < 0; ++i)
          if (c[i]->invertible()) first = i;
        if (first < 0) continue;
        if (!(*c[first] == r->one())) continue;
        out.push_back(ProjPoint{Vec3{x, y, z}});
      }
  return out;
}

ProjPlaneModel ProjPlaneModel::build(const RingPtr& r) {
  ProjPlaneModel m;
  m.ring = r;
  m.points = enumerate_proj_points(r);
  m.lines.reserve(m.points.size());
  for (const auto& p : m.points) m.lines.push_back(dualize(p));

  FinitePlane& f = m.fin;
  f.kind = PlaneKind::Projective;
  f.np = int(m.points.size());
  f.nl = int(m.lines.size());
  f.apart_pt = BitMat(std::size_t(f.np), std::size_t(f.np));
  f.apart_li = BitMat(std::size_t(f.nl), std::size_t(f.nl));
  f.incident = BitMat(std::size_t(f.np), std::size_t(f.nl));
  f.outside = BitMat(std::size_t(f.np), std::size_t(f.nl));
  for (int i = 0; i < f.np; ++i)
    for (int j = 0; j < f.np; ++j)
      if (i != j && pt_apart(m.points[std::size_t(i)], m.points[std::size_t(j)])) {
        f.apart_pt.set(std::size_t(i), std::size_t(j));
        f.apart_li.set(std::size_t(i), std::size_t(j));
      }
  for (int i = 0; i < f.np; ++i)
    for (int j = 0; j < f.nl; ++j) {
      if (incident(m.points[std::size_t(i)], m.lines[std::size_t(j)]))
        f.incident.set(std::size_t(i), std::size_t(j));
      else if (outside(m.points[std::size_t(i)], m.lines[std::size_t(j)]))
        f.outside.set(std::size_t(i), std::size_t(j));
    }
  return m;
}

namespace {
int index_of_triple(const std::vector<ProjPoint>& pts, const Vec3& v,
                    const char* what) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i].v == v) return int(i);
  throw Error(std::string(what) + ": element not in plane enumeration");
}
}  // namespace

int ProjPlaneModel::point_index(const ProjPoint& p) const {
  return index_of_triple(points, p.v, "point_index");
}

int ProjPlaneModel::line_index(const ProjLine& l) const {
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (lines[i].v == l.v) return int(i);
  throw Error("line_index: element not in plane enumeration");
}

}  // namespace ringplane
