#include "ringplane/affine.hpp"

namespace ringplane {

bool is_affine_line(const ProjLine& l) {
  return l.v.x.invertible() || l.v.y.invertible();
}

AffPoint mk_aff_point(const RingPtr& r, std::int64_t x, std::int64_t y) {
  return AffPoint{r->from_int(x), r->from_int(y)};
}

ProjPoint embed(const AffPoint& a) {
  return mk_proj_point(Vec3{a.x, a.y, a.x.ring()->one()});
}

std::optional<AffPoint> to_affine(const ProjPoint& p) {
  auto zi = p.v.z.inverse();
  if (!zi) return std::nullopt;
  return AffPoint{p.v.x * *zi, p.v.y * *zi};
}

bool aff_apart(const AffPoint& a, const AffPoint& b) {
  return (a.x - b.x).invertible() || (a.y - b.y).invertible();
}

bool aff_incident(const AffPoint& a, const ProjLine& l) {
  return l.v.x * a.x + l.v.y * a.y + l.v.z == a.x.ring()->zero();
}

bool aff_outside(const AffPoint& a, const ProjLine& l) {
  return (l.v.x * a.x + l.v.y * a.y + l.v.z).invertible();
}

bool parallel(const ProjLine& k, const ProjLine& l) {
  return k.v.x * l.v.y - k.v.y * l.v.x == k.v.x.ring()->zero();
}

ProjLine aff_line_through(const AffPoint& a, const AffPoint& b) {
  if (!aff_apart(a, b)) throw Error("aff_line_through: points not apart");
  return line_through(embed(a), embed(b));
}

ProjLine parallel_through(const AffPoint& a, const ProjLine& k) {
  // (k0, k1, -(k0 a0 + k1 a1)) passes through a and shares the first pair
  return mk_proj_line(Vec3{k.v.x, k.v.y, -(k.v.x * a.x + k.v.y * a.y)});
}

std::optional<AffPoint> aff_meet(const ProjLine& k, const ProjLine& l) {
  if (!li_apart(k, l)) return std::nullopt;
  return to_affine(meet(k, l));
}

AffPlaneModel AffPlaneModel::build(const RingPtr& r) {
  if (!r->finite()) throw Error("cannot enumerate an infinite plane");
  AffPlaneModel m;
  m.ring = r;
  auto elems = r->enumerate();
  for (const auto& x : elems)
    for (const auto& y : elems) m.points.push_back(AffPoint{x, y});
  for (const auto& p : enumerate_proj_points(r)) {
    ProjLine l = dualize(p);
    if (is_affine_line(l)) m.lines.push_back(l);
  }

  FinitePlane& f = m.fin;
  f.kind = PlaneKind::Affine;
  f.np = int(m.points.size());
  f.nl = int(m.lines.size());
  f.apart_pt = BitMat(std::size_t(f.np), std::size_t(f.np));
  f.apart_li = BitMat(std::size_t(f.nl), std::size_t(f.nl));
  f.incident = BitMat(std::size_t(f.np), std::size_t(f.nl));
  f.outside = BitMat(std::size_t(f.np), std::size_t(f.nl));
  f.parallel = BitMat(std::size_t(f.nl), std::size_t(f.nl));
  for (int i = 0; i < f.np; ++i)
    for (int j = 0; j < f.np; ++j)
      if (i != j && aff_apart(m.points[std::size_t(i)], m.points[std::size_t(j)]))
        f.apart_pt.set(std::size_t(i), std::size_t(j));
  for (int i = 0; i < f.nl; ++i)
    for (int j = 0; j < f.nl; ++j) {
      if (i != j && li_apart(m.lines[std::size_t(i)], m.lines[std::size_t(j)]))
        f.apart_li.set(std::size_t(i), std::size_t(j));
      if (parallel(m.lines[std::size_t(i)], m.lines[std::size_t(j)]))
        f.parallel.set(std::size_t(i), std::size_t(j));
    }
  for (int i = 0; i < f.np; ++i)
    for (int j = 0; j < f.nl; ++j) {
      if (aff_incident(m.points[std::size_t(i)], m.lines[std::size_t(j)]))
        f.incident.set(std::size_t(i), std::size_t(j));
      else if (aff_outside(m.points[std::size_t(i)], m.lines[std::size_t(j)]))
        f.outside.set(std::size_t(i), std::size_t(j));
    }
  return m;
}

int AffPlaneModel::point_index(const AffPoint& a) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == a) return int(i);
  throw Error("point_index: element not in plane enumeration");
}

int AffPlaneModel::line_index(const ProjLine& l) const {
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (lines[i] == l) return int(i);
  throw Error("line_index: element not in plane enumeration");
}

}  // namespace ringplane
