#include "ringplane/synthetic.hpp"

#include <sstream>

namespace ringplane {

namespace {

struct ParsedLine {
  std::string word;
  std::vector<long> args;
};

[[noreturn]] void parse_fail(std::size_t lineno, const std::string& msg) {
  throw Error("parse error at line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

FinitePlane parse_plane(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;

  FinitePlane p;
  bool have_kind = false, have_points = false, have_lines = false;
  struct Rel {
    std::string name;
    long a, b;
    std::size_t lineno;
  };
  std::vector<Rel> rels;

  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::istringstream ls(raw);
    std::string word;
    if (!(ls >> word)) continue;  // blank or comment line

    if (word == "plane") {
      std::string kind;
      if (!(ls >> kind)) parse_fail(lineno, "expected plane kind");
      if (kind == "affine")
        p.kind = PlaneKind::Affine;
      else if (kind == "projective")
        p.kind = PlaneKind::Projective;
      else
        parse_fail(lineno, "unknown plane kind '" + kind + "'");
      have_kind = true;
    } else if (word == "points" || word == "lines") {
      long n;
      if (!(ls >> n) || n < 0) parse_fail(lineno, "expected a count");
      (word == "points" ? have_points : have_lines) = true;
      (word == "points" ? p.np : p.nl) = static_cast<int>(n);
    } else if (word == "apart_pt" || word == "apart_li" || word == "incident" ||
               word == "outside" || word == "parallel") {
      long a, b;
      if (!(ls >> a >> b)) parse_fail(lineno, "expected two indices");
      rels.push_back(Rel{word, a, b, lineno});
    } else {
      parse_fail(lineno, "unknown directive '" + word + "'");
    }
    std::string extra;
    if (ls >> extra) parse_fail(lineno, "trailing input '" + extra + "'");
  }

  if (!have_kind) throw Error("parse error: missing 'plane' header");
  if (!have_points || !have_lines)
    throw Error("parse error: missing 'points' or 'lines' header");

  p.apart_pt = BitMat(std::size_t(p.np), std::size_t(p.np));
  p.apart_li = BitMat(std::size_t(p.nl), std::size_t(p.nl));
  p.incident = BitMat(std::size_t(p.np), std::size_t(p.nl));
  p.outside = BitMat(std::size_t(p.np), std::size_t(p.nl));
  if (p.kind == PlaneKind::Affine)
    p.parallel = BitMat(std::size_t(p.nl), std::size_t(p.nl));

  auto check_pt = [&](long i, std::size_t ln) {
    if (i < 0 || i >= p.np)
      parse_fail(ln, "point index out of range: " + std::to_string(i));
  };
  auto check_li = [&](long i, std::size_t ln) {
    if (i < 0 || i >= p.nl)
      parse_fail(ln, "line index out of range: " + std::to_string(i));
  };

  for (const auto& r : rels) {
    if (r.name == "apart_pt") {
      check_pt(r.a, r.lineno);
      check_pt(r.b, r.lineno);
      if (r.a == r.b) parse_fail(r.lineno, "reflexive apart_pt");
      p.apart_pt.set(std::size_t(r.a), std::size_t(r.b));
      p.apart_pt.set(std::size_t(r.b), std::size_t(r.a));
    } else if (r.name == "apart_li") {
      check_li(r.a, r.lineno);
      check_li(r.b, r.lineno);
      if (r.a == r.b) parse_fail(r.lineno, "reflexive apart_li");
      p.apart_li.set(std::size_t(r.a), std::size_t(r.b));
      p.apart_li.set(std::size_t(r.b), std::size_t(r.a));
    } else if (r.name == "incident") {
      check_pt(r.a, r.lineno);
      check_li(r.b, r.lineno);
      if (p.outside.get(std::size_t(r.a), std::size_t(r.b)))
        parse_fail(r.lineno, "incident overlaps outside");
      p.incident.set(std::size_t(r.a), std::size_t(r.b));
    } else if (r.name == "outside") {
      check_pt(r.a, r.lineno);
      check_li(r.b, r.lineno);
      if (p.incident.get(std::size_t(r.a), std::size_t(r.b)))
        parse_fail(r.lineno, "outside overlaps incident");
      p.outside.set(std::size_t(r.a), std::size_t(r.b));
    } else {  // parallel
      if (p.kind != PlaneKind::Affine)
        parse_fail(r.lineno, "parallel relation in a projective plane");
      check_li(r.a, r.lineno);
      check_li(r.b, r.lineno);
      p.parallel.set(std::size_t(r.a), std::size_t(r.b));
      p.parallel.set(std::size_t(r.b), std::size_t(r.a));
    }
  }
  return p;
}

std::string serialize_plane(const FinitePlane& p) {
  std::ostringstream out;
  out << "plane " << (p.kind == PlaneKind::Affine ? "affine" : "projective")
      << "\n";
  out << "points " << p.np << "\n";
  out << "lines " << p.nl << "\n";
  for (int i = 0; i < p.np; ++i)
    for (int j = i + 1; j < p.np; ++j)
      if (p.pt_apart(i, j)) out << "apart_pt " << i << " " << j << "\n";
  for (int i = 0; i < p.nl; ++i)
    for (int j = i + 1; j < p.nl; ++j)
      if (p.li_apart(i, j)) out << "apart_li " << i << " " << j << "\n";
  for (int i = 0; i < p.np; ++i)
    for (int j = 0; j < p.nl; ++j)
      if (p.in(i, j)) out << "incident " << i << " " << j << "\n";
  for (int i = 0; i < p.np; ++i)
    for (int j = 0; j < p.nl; ++j)
      if (p.out(i, j)) out << "outside " << i << " " << j << "\n";
  if (p.kind == PlaneKind::Affine)
    for (int i = 0; i < p.nl; ++i)
      for (int j = i; j < p.nl; ++j)
        if (p.par(i, j)) out << "parallel " << i << " " << j << "\n";
  return out.str();
}

FinitePlane dual_plane(const FinitePlane& p) {
  if (p.kind != PlaneKind::Projective)
    throw Error("dual_plane requires a projective plane");
  FinitePlane d;
  d.kind = PlaneKind::Projective;
  d.np = p.nl;
  d.nl = p.np;
  d.apart_pt = p.apart_li;
  d.apart_li = p.apart_pt;
  d.incident = BitMat(std::size_t(d.np), std::size_t(d.nl));
  d.outside = BitMat(std::size_t(d.np), std::size_t(d.nl));
  for (int l = 0; l < p.nl; ++l)
    for (int a = 0; a < p.np; ++a) {
      if (p.in(a, l)) d.incident.set(std::size_t(l), std::size_t(a));
      if (p.out(a, l)) d.outside.set(std::size_t(l), std::size_t(a));
    }
  return d;
}

DerivedAffine derive_affine(const FinitePlane& proj, int l_inf) {
  if (proj.kind != PlaneKind::Projective)
    throw Error("derive_affine requires a projective plane");
  if (l_inf < 0 || l_inf >= proj.nl)
    throw Error("derive_affine: line index out of range");

  DerivedAffine d;
  d.l_inf = l_inf;
  d.parent_point_to_derived.assign(std::size_t(proj.np), -1);
  d.parent_line_to_derived.assign(std::size_t(proj.nl), -1);
  for (int a = 0; a < proj.np; ++a)
    if (proj.out(a, l_inf)) {
      d.parent_point_to_derived[std::size_t(a)] = int(d.point_to_parent.size());
      d.point_to_parent.push_back(a);
    }
  for (int k = 0; k < proj.nl; ++k)
    if (proj.li_apart(k, l_inf)) {
      d.parent_line_to_derived[std::size_t(k)] = int(d.line_to_parent.size());
      d.line_to_parent.push_back(k);
    }

  FinitePlane& a = d.plane;
  a.kind = PlaneKind::Affine;
  a.np = int(d.point_to_parent.size());
  a.nl = int(d.line_to_parent.size());
  a.apart_pt = BitMat(std::size_t(a.np), std::size_t(a.np));
  a.apart_li = BitMat(std::size_t(a.nl), std::size_t(a.nl));
  a.incident = BitMat(std::size_t(a.np), std::size_t(a.nl));
  a.outside = BitMat(std::size_t(a.np), std::size_t(a.nl));
  a.parallel = BitMat(std::size_t(a.nl), std::size_t(a.nl));

  for (int i = 0; i < a.np; ++i)
    for (int j = 0; j < a.np; ++j)
      if (proj.pt_apart(d.point_to_parent[std::size_t(i)], d.point_to_parent[std::size_t(j)]))
        a.apart_pt.set(std::size_t(i), std::size_t(j));
  for (int i = 0; i < a.nl; ++i)
    for (int j = 0; j < a.nl; ++j)
      if (proj.li_apart(d.line_to_parent[std::size_t(i)], d.line_to_parent[std::size_t(j)]))
        a.apart_li.set(std::size_t(i), std::size_t(j));
  for (int i = 0; i < a.np; ++i)
    for (int j = 0; j < a.nl; ++j) {
      int pp = d.point_to_parent[std::size_t(i)], pl = d.line_to_parent[std::size_t(j)];
      if (proj.in(pp, pl)) a.incident.set(std::size_t(i), std::size_t(j));
      if (proj.out(pp, pl)) a.outside.set(std::size_t(i), std::size_t(j));
    }

  // parallel: meets with l_inf coincide. Each derived line is apart from
  // l_inf, so in a plane satisfying the projective axioms the meet exists and
  // is unique; tolerate degenerate inputs by comparing full intersection sets.
  std::vector<std::vector<int>> inf_meets(std::size_t(a.nl));
  for (int i = 0; i < a.nl; ++i) {
    int pl = d.line_to_parent[std::size_t(i)];
    for (int x = 0; x < proj.np; ++x)
      if (proj.in(x, pl) && proj.in(x, l_inf))
        inf_meets[std::size_t(i)].push_back(x);
  }
  for (int i = 0; i < a.nl; ++i)
    for (int j = 0; j < a.nl; ++j)
      if (!inf_meets[std::size_t(i)].empty() &&
          inf_meets[std::size_t(i)] == inf_meets[std::size_t(j)])
        a.parallel.set(std::size_t(i), std::size_t(j));
  return d;
}

// ---- PlaneGeometry ---------------------------------------------------------

PlaneGeometry::PlaneGeometry(const FinitePlane& p) : plane(&p) {
  pts_on_line.assign(std::size_t(p.nl), {});
  lines_thru_pt.assign(std::size_t(p.np), {});
  for (int a = 0; a < p.np; ++a)
    for (int l = 0; l < p.nl; ++l)
      if (p.in(a, l)) {
        pts_on_line[std::size_t(l)].push_back(a);
        lines_thru_pt[std::size_t(a)].push_back(l);
      }

  join_.assign(std::size_t(p.np) * std::size_t(p.np), -1);
  for (int a = 0; a < p.np; ++a)
    for (int b = 0; b < p.np; ++b) {
      int found = -1;
      for (int l : lines_thru_pt[std::size_t(a)]) {
        if (p.in(b, l)) {
          if (found >= 0) {
            found = -2;
            break;
          }
          found = l;
        }
      }
      join_[std::size_t(a) * std::size_t(p.np) + std::size_t(b)] = found;
    }

  common_.assign(std::size_t(p.nl) * std::size_t(p.nl), {});
  meet_.assign(std::size_t(p.nl) * std::size_t(p.nl), -1);
  for (int k = 0; k < p.nl; ++k)
    for (int l = 0; l < p.nl; ++l) {
      auto& c = common_[std::size_t(k) * std::size_t(p.nl) + std::size_t(l)];
      for (int x : pts_on_line[std::size_t(k)])
        if (p.in(x, l)) c.push_back(x);
      meet_[std::size_t(k) * std::size_t(p.nl) + std::size_t(l)] =
          c.empty() ? -1 : (c.size() == 1 ? c[0] : -2);
    }

  if (p.kind == PlaneKind::Affine) {
    parthru_.assign(std::size_t(p.np) * std::size_t(p.nl), -1);
    for (int a = 0; a < p.np; ++a)
      for (int k = 0; k < p.nl; ++k) {
        int found = -1;
        for (int l : lines_thru_pt[std::size_t(a)]) {
          if (p.par(k, l)) {
            if (found >= 0) {
              found = -2;
              break;
            }
            found = l;
          }
        }
        parthru_[std::size_t(a) * std::size_t(p.nl) + std::size_t(k)] = found;
      }
  }
}

int PlaneGeometry::parallel_through(int p, int k) const {
  if (plane->kind != PlaneKind::Affine)
    throw Error("parallel_through on a projective plane");
  return parthru_[std::size_t(p) * std::size_t(plane->nl) + std::size_t(k)];
}

std::vector<int> PlaneGeometry::lines_containing(int a, int b) const {
  std::vector<int> out;
  for (int l : lines_thru_pt[std::size_t(a)])
    if (plane->in(b, l)) out.push_back(l);
  return out;
}

int PlaneGeometry::first_point_outside(int l) const {
  for (int a = 0; a < plane->np; ++a)
    if (plane->out(a, l)) return a;
  return -1;
}

}  // namespace ringplane
