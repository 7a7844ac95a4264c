#include "ringplane/morphisms.hpp"

#include <sstream>

namespace ringplane {

PlaneMorphism identity_morphism(const FinitePlane& p) {
  PlaneMorphism m;
  m.src = m.dst = &p;
  m.pt_map.resize(std::size_t(p.np));
  m.li_map.resize(std::size_t(p.nl));
  for (int i = 0; i < p.np; ++i) m.pt_map[std::size_t(i)] = i;
  for (int i = 0; i < p.nl; ++i) m.li_map[std::size_t(i)] = i;
  return m;
}

PlaneMorphism compose(const PlaneMorphism& g, const PlaneMorphism& f) {
  if (f.dst != g.src) throw Error("compose: morphism domains do not match");
  PlaneMorphism m;
  m.src = f.src;
  m.dst = g.dst;
  m.pt_map.reserve(f.pt_map.size());
  for (int v : f.pt_map) m.pt_map.push_back(g.pt(v));
  for (int v : f.li_map) m.li_map.push_back(g.li(v));
  return m;
}

PlaneMorphism inverse_morphism(const PlaneMorphism& m) {
  if (m.src->np != m.dst->np || m.src->nl != m.dst->nl)
    throw Error("inverse_morphism: planes of different size");
  PlaneMorphism inv;
  inv.src = m.dst;
  inv.dst = m.src;
  inv.pt_map.assign(std::size_t(m.dst->np), -1);
  inv.li_map.assign(std::size_t(m.dst->nl), -1);
  for (int i = 0; i < m.src->np; ++i) {
    if (inv.pt_map[std::size_t(m.pt(i))] != -1)
      throw Error("inverse_morphism: point map not injective");
    inv.pt_map[std::size_t(m.pt(i))] = i;
  }
  for (int i = 0; i < m.src->nl; ++i) {
    if (inv.li_map[std::size_t(m.li(i))] != -1)
      throw Error("inverse_morphism: line map not injective");
    inv.li_map[std::size_t(m.li(i))] = i;
  }
  for (int v : inv.pt_map)
    if (v < 0) throw Error("inverse_morphism: point map not surjective");
  for (int v : inv.li_map)
    if (v < 0) throw Error("inverse_morphism: line map not surjective");
  return inv;
}

namespace {

void push(std::vector<AxiomOutcome>& out, std::string name, bool pass,
          std::string witness) {
  AxiomOutcome a;
  a.name = std::move(name);
  a.pass = pass;
  a.witness = std::move(witness);
  out.push_back(std::move(a));
}

std::string wit2(const char* t1, int a, const char* t2, int b) {
  return std::string(t1) + ":" + std::to_string(a) + "," + t2 + ":" +
         std::to_string(b);
}

}  // namespace

VerifyReport verify_morphism(const PlaneMorphism& m) {
  const FinitePlane& s = *m.src;
  const FinitePlane& d = *m.dst;
  VerifyReport rep;
  auto& out = rep.axioms;
  if (int(m.pt_map.size()) != s.np || int(m.li_map.size()) != s.nl)
    throw Error("verify_morphism: map sizes do not match the source plane");

  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < s.np && ok; ++a)
      for (int b = 0; b < s.np && ok; ++b)
        if (s.pt_apart(a, b) && !d.pt_apart(m.pt(a), m.pt(b))) {
          ok = false;
          w = wit2("pt", a, "pt", b);
        }
    push(out, "preserves_apart_pt", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int k = 0; k < s.nl && ok; ++k)
      for (int l = 0; l < s.nl && ok; ++l)
        if (s.li_apart(k, l) && !d.li_apart(m.li(k), m.li(l))) {
          ok = false;
          w = wit2("li", k, "li", l);
        }
    push(out, "preserves_apart_li", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < s.np && ok; ++a)
      for (int l = 0; l < s.nl && ok; ++l)
        if (s.in(a, l) && !d.in(m.pt(a), m.li(l))) {
          ok = false;
          w = wit2("pt", a, "li", l);
        }
    push(out, "preserves_incident", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < s.np && ok; ++a)
      for (int l = 0; l < s.nl && ok; ++l)
        if (s.out(a, l) && !d.out(m.pt(a), m.li(l))) {
          ok = false;
          w = wit2("pt", a, "li", l);
        }
    push(out, "preserves_outside", ok, w);
  }
  if (s.kind == PlaneKind::Affine) {
    bool ok = true;
    std::string w;
    for (int k = 0; k < s.nl && ok; ++k)
      for (int l = 0; l < s.nl && ok; ++l)
        if (s.par(k, l) && !d.par(m.li(k), m.li(l))) {
          ok = false;
          w = wit2("li", k, "li", l);
        }
    push(out, "preserves_parallel", ok, w);
  }
  {
    // the line map is the join of the images of any apart pair on the line
    PlaneGeometry gs(s), gd(d);
    bool ok = true;
    std::string w;
    for (int l = 0; l < s.nl && ok; ++l) {
      const auto& pts = gs.pts_on_line[std::size_t(l)];
      for (std::size_t i = 0; i < pts.size() && ok; ++i)
        for (std::size_t j = 0; j < pts.size() && ok; ++j) {
          if (!s.pt_apart(pts[i], pts[j])) continue;
          int jn = gd.join(m.pt(pts[i]), m.pt(pts[j]));
          if (jn >= 0 && jn != m.li(l)) {
            ok = false;
            w = wit2("li", l, "pt", pts[i]);
          }
        }
    }
    push(out, "line_map_determined", ok, w);
  }
  return rep;
}

VerifyReport verify_isomorphism(const PlaneMorphism& m) {
  VerifyReport rep = verify_morphism(m);
  bool bij = true;
  std::string why;
  try {
    PlaneMorphism inv = inverse_morphism(m);
    VerifyReport back = verify_morphism(inv);
    for (auto& a : back.axioms) {
      a.name = "inverse_" + a.name;
      rep.axioms.push_back(std::move(a));
    }
  } catch (const Error& e) {
    bij = false;
    why = e.what();
  }
  push(rep.axioms, "bijective", bij, why);
  return rep;
}

// ---- induced morphisms -------------------------------------------------------

PlaneMorphism from_ring_hom_proj(const RingHom& f, const ProjPlaneModel& src,
                                 const ProjPlaneModel& dst) {
  if (!f.source()->compatible(*src.ring) || !f.target()->compatible(*dst.ring))
    throw Error("from_ring_hom_proj: ring contexts do not match the planes");
  PlaneMorphism m;
  m.src = &src.fin;
  m.dst = &dst.fin;
  for (const auto& p : src.points) {
    ProjPoint q = mk_proj_point(Vec3{f(p.v.x), f(p.v.y), f(p.v.z)});
    m.pt_map.push_back(dst.point_index(q));
  }
  for (const auto& l : src.lines) {
    ProjLine q = mk_proj_line(Vec3{f(l.v.x), f(l.v.y), f(l.v.z)});
    m.li_map.push_back(dst.line_index(q));
  }
  return m;
}

PlaneMorphism from_ring_hom_aff(const RingHom& f, const AffPlaneModel& src,
                                const AffPlaneModel& dst) {
  if (!f.source()->compatible(*src.ring) || !f.target()->compatible(*dst.ring))
    throw Error("from_ring_hom_aff: ring contexts do not match the planes");
  PlaneMorphism m;
  m.src = &src.fin;
  m.dst = &dst.fin;
  for (const auto& p : src.points)
    m.pt_map.push_back(dst.point_index(AffPoint{f(p.x), f(p.y)}));
  for (const auto& l : src.lines) {
    ProjLine q = mk_proj_line(Vec3{f(l.v.x), f(l.v.y), f(l.v.z)});
    m.li_map.push_back(dst.line_index(q));
  }
  return m;
}

PlaneMorphism auto_from_H(const ProjClassMatrix& h, const ProjPlaneModel& mod) {
  PlaneMorphism m;
  m.src = &mod.fin;
  m.dst = &mod.fin;
  const Mat3& mat = h.rep();
  Mat3 line_mat = mat3_transpose(inverse3(mat));
  for (const auto& p : mod.points) {
    Vec3 image = mat3_apply(mat, p.v);
    if (!image.x.invertible() && !image.y.invertible() && !image.z.invertible())
      throw Error("matrix does not act on the plane: point " + p.str() +
                  " maps to (" + image.x.str() + "," + image.y.str() + "," +
                  image.z.str() + ")");
    m.pt_map.push_back(mod.point_index(ProjPoint{mk_proj_point(image).v}));
  }
  for (const auto& l : mod.lines) {
    Vec3 image = mat3_apply(line_mat, l.v);
    if (!image.x.invertible() && !image.y.invertible() && !image.z.invertible())
      throw Error("matrix does not act on the plane: line " + l.str() +
                  " maps to (" + image.x.str() + "," + image.y.str() + "," +
                  image.z.str() + ")");
    m.li_map.push_back(mod.line_index(mk_proj_line(image)));
  }
  return m;
}

PlaneMorphism auto_from_G(const AffMatrix& g, const AffPlaneModel& mod) {
  PlaneMorphism m;
  m.src = &mod.fin;
  m.dst = &mod.fin;
  for (const auto& p : mod.points) {
    Vec2 image = g.apply(Vec2{p.x, p.y});
    m.pt_map.push_back(mod.point_index(AffPoint{image.x, image.y}));
  }
  Mat3 line_mat = mat3_transpose(inverse3(g.mat()));
  for (const auto& l : mod.lines)
    m.li_map.push_back(mod.line_index(mk_proj_line(mat3_apply(line_mat, l.v))));
  return m;
}

// ---- decomposition -----------------------------------------------------------

ProjDecomposition decompose_proj(const ProjPlaneModel& src,
                                 const ProjPlaneModel& dst,
                                 const PlaneMorphism& m) {
  if (!dst.ring->check_local().local)
    throw Error("decompose_proj: target ring must be local");
  auto dst_pt = [&](int i) { return dst.points[std::size_t(m.pt(i))]; };
  const RingPtr& r = src.ring;
  const RingPtr& s = dst.ring;

  Frame4 image{
      dst_pt(src.point_index(mk_proj_point(r, 1, 0, 0))),
      dst_pt(src.point_index(mk_proj_point(r, 0, 1, 0))),
      dst_pt(src.point_index(mk_proj_point(r, 0, 0, 1))),
      dst_pt(src.point_index(mk_proj_point(r, 1, 1, 1)))};
  ProjClassMatrix h = frame_to_H(image);
  Mat3 hinv = inverse3(h.rep());

  // ring part read off the x-axis: h^-1 phi (a,0,1) = (f(a),0,1)
  std::vector<RingValue> images;
  for (const auto& a : r->enumerate()) {
    ProjPoint p = mk_proj_point(Vec3{a, r->zero(), r->one()});
    ProjPoint q = dst_pt(src.point_index(p));
    Vec3 w = mat3_apply(hinv, q.v);
    auto zi = w.z.inverse();
    if (!zi || !(w.y * *zi == s->zero()))
      throw Error("decompose_proj: image does not lie on the coordinate axis");
    images.push_back(w.x * *zi);
  }
  auto f = RingHom::make(r, s, images);
  if (!f) throw Error("decompose_proj: extracted map is not a ring hom");

  // recomposition must reproduce the morphism exactly
  PlaneMorphism recomposed =
      compose(auto_from_H(h, dst), from_ring_hom_proj(*f, src, dst));
  if (!(recomposed == m))
    throw Error("decompose_proj: recomposition mismatch, input was not a "
                "plane morphism");
  return ProjDecomposition{h, *f};
}

AffDecomposition decompose_aff(const AffPlaneModel& src,
                               const AffPlaneModel& dst,
                               const PlaneMorphism& m) {
  if (!dst.ring->check_local().local)
    throw Error("decompose_aff: target ring must be local");
  const RingPtr& r = src.ring;
  const RingPtr& s = dst.ring;
  auto img = [&](std::int64_t x, std::int64_t y) {
    return dst.points[std::size_t(m.pt(src.point_index(mk_aff_point(r, x, y))))];
  };
  AffPoint a = img(1, 0), b = img(0, 1), c = img(0, 0);
  Mat3 mat = mat3_identity(s);
  mat.at(0, 0) = a.x - c.x; mat.at(0, 1) = b.x - c.x; mat.at(0, 2) = c.x;
  mat.at(1, 0) = a.y - c.y; mat.at(1, 1) = b.y - c.y; mat.at(1, 2) = c.y;
  AffMatrix g(mat);
  AffMatrix ginv = g.inverse();

  std::vector<RingValue> images;
  for (const auto& x : r->enumerate()) {
    AffPoint p = dst.points[std::size_t(
        m.pt(src.point_index(AffPoint{x, r->zero()})))];
    Vec2 w = ginv.apply(Vec2{p.x, p.y});
    if (!(w.y == s->zero()))
      throw Error("decompose_aff: image does not lie on the coordinate axis");
    images.push_back(w.x);
  }
  auto f = RingHom::make(r, s, images);
  if (!f) throw Error("decompose_aff: extracted map is not a ring hom");

  PlaneMorphism recomposed =
      compose(auto_from_G(g, dst), from_ring_hom_aff(*f, src, dst));
  if (!(recomposed == m))
    throw Error("decompose_aff: recomposition mismatch, input was not a "
                "plane morphism");
  return AffDecomposition{g, *f};
}

// ---- affine-to-projective extension -------------------------------------------

PlaneMorphism extend_affine_to_projective(const FinitePlane& proj_src,
                                          const FinitePlane& proj_dst,
                                          const DerivedAffine& der_src,
                                          const DerivedAffine& der_dst,
                                          const PlaneMorphism& phi) {
  if (phi.src != &der_src.plane || phi.dst != &der_dst.plane)
    throw Error("extend: morphism does not connect the derived planes");
  PlaneGeometry gs(proj_src), gd(proj_dst);
  const int kinf = der_src.l_inf;

  auto line_image = [&](int parent_line) {
    int dl = der_src.parent_line_to_derived[std::size_t(parent_line)];
    if (dl < 0) throw Error("extend: line not in the derived plane");
    return der_dst.line_to_parent[std::size_t(phi.li(dl))];
  };

  PlaneMorphism psi;
  psi.src = &proj_src;
  psi.dst = &proj_dst;
  psi.pt_map.assign(std::size_t(proj_src.np), -1);
  psi.li_map.assign(std::size_t(proj_src.nl), -1);

  for (int a = 0; a < proj_src.np; ++a) {
    // two lines through a, apart from each other and from the chosen line
    int k = -1, l = -1;
    const auto& thru = gs.lines_thru_pt[std::size_t(a)];
    for (std::size_t i = 0; i < thru.size() && k < 0; ++i) {
      if (!proj_src.li_apart(thru[i], kinf)) continue;
      for (std::size_t j = i + 1; j < thru.size(); ++j) {
        if (!proj_src.li_apart(thru[j], kinf)) continue;
        if (!proj_src.li_apart(thru[i], thru[j])) continue;
        k = thru[i];
        l = thru[j];
        break;
      }
    }
    if (k < 0)
      throw Error("extend: no line pair through point " + std::to_string(a));
    int mk = line_image(k), ml = line_image(l);
    int image = gd.meet(mk, ml);
    if (image < 0) throw Error("extend: images of the line pair do not meet");
    psi.pt_map[std::size_t(a)] = image;
  }

  for (int l = 0; l < proj_src.nl; ++l) {
    const auto& pts = gs.pts_on_line[std::size_t(l)];
    int li = -1;
    for (std::size_t i = 0; i < pts.size() && li < 0; ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (proj_src.pt_apart(pts[i], pts[j])) {
          li = gd.join(psi.pt_map[std::size_t(pts[i])],
                       psi.pt_map[std::size_t(pts[j])]);
          break;
        }
    if (li < 0) throw Error("extend: no join for the images of line " +
                            std::to_string(l));
    psi.li_map[std::size_t(l)] = li;
  }
  return psi;
}

PlaneMorphism restrict_to_derived(const PlaneMorphism& psi,
                                  const DerivedAffine& der_src,
                                  const DerivedAffine& der_dst) {
  PlaneMorphism m;
  m.src = &der_src.plane;
  m.dst = &der_dst.plane;
  for (int pp : der_src.point_to_parent) {
    int image = der_dst.parent_point_to_derived[std::size_t(psi.pt(pp))];
    if (image < 0)
      throw Error("restrict: image point escapes the derived plane");
    m.pt_map.push_back(image);
  }
  for (int pl : der_src.line_to_parent) {
    int image = der_dst.parent_line_to_derived[std::size_t(psi.li(pl))];
    if (image < 0)
      throw Error("restrict: image line escapes the derived plane");
    m.li_map.push_back(image);
  }
  return m;
}

// ---- io ------------------------------------------------------------------------

PlaneMorphism parse_morphism(const std::string& text, const FinitePlane& src,
                             const FinitePlane& dst) {
  PlaneMorphism m;
  m.src = &src;
  m.dst = &dst;
  m.pt_map.assign(std::size_t(src.np), -1);
  m.li_map.assign(std::size_t(src.nl), -1);
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::istringstream ls(raw);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "morphism") {
      have_header = true;
      continue;
    }
    long a, b;
    if ((word != "point" && word != "line") || !(ls >> a >> b))
      throw Error("parse error at line " + std::to_string(lineno) +
                  ": expected 'point i j' or 'line i j'");
    if (word == "point") {
      if (a < 0 || a >= src.np || b < 0 || b >= dst.np)
        throw Error("parse error at line " + std::to_string(lineno) +
                    ": point index out of range");
      m.pt_map[std::size_t(a)] = int(b);
    } else {
      if (a < 0 || a >= src.nl || b < 0 || b >= dst.nl)
        throw Error("parse error at line " + std::to_string(lineno) +
                    ": line index out of range");
      m.li_map[std::size_t(a)] = int(b);
    }
  }
  if (!have_header) throw Error("parse error: missing 'morphism' header");
  for (int v : m.pt_map)
    if (v < 0) throw Error("parse error: incomplete point map");
  for (int v : m.li_map)
    if (v < 0) throw Error("parse error: incomplete line map");
  return m;
}

std::string serialize_morphism(const PlaneMorphism& m) {
  std::ostringstream out;
  out << "morphism\n";
  for (std::size_t i = 0; i < m.pt_map.size(); ++i)
    out << "point " << i << " " << m.pt_map[i] << "\n";
  for (std::size_t i = 0; i < m.li_map.size(); ++i)
    out << "line " << i << " " << m.li_map[i] << "\n";
  return out.str();
}

}  // namespace ringplane
