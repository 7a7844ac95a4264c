#include "ringplane/axioms.hpp"

#include <array>
#include <functional>
#include <sstream>

#include "ringplane/rng.hpp"

namespace ringplane {

namespace {

std::string wit() { return ""; }
template <typename... Rest>
std::string wit(const char* tag, int idx, Rest... rest) {
  std::string head = std::string(tag) + ":" + std::to_string(idx);
  std::string tail = wit(rest...);
  return tail.empty() ? head : head + "," + tail;
}

// Exhaustive premise-driven loops share a step counter; when it crosses the
// budget the loop aborts and the caller falls back to seeded sampling.
struct Budget {
  std::uint64_t used = 0;
  std::uint64_t limit = 0;
  bool step() { return ++used <= limit; }
};

}  // namespace

Theory theory_for(PlaneKind kind, bool full) {
  if (kind == PlaneKind::Projective)
    return full ? Theory::Projective : Theory::Preprojective;
  return full ? Theory::Affine : Theory::Preaffine;
}

bool VerifyReport::all_pass() const {
  for (const auto& a : axioms)
    if (!a.pass) return false;
  return true;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const auto& a : axioms) {
    os << "AXIOM " << a.name << " " << (a.pass ? "PASS" : "FAIL");
    if (!a.witness.empty()) os << " witness=" << a.witness;
    if (a.mode == "sampled")
      os << " mode=sampled configurations=" << a.configurations;
    os << "\n";
  }
  return os.str();
}

// ---- DeltaTables -------------------------------------------------------------

DeltaTables::DeltaTables(const FinitePlane& p, const PlaneGeometry& g)
    : p_(&p), g_(&g), np_(p.np) {
  coll_ = BitMat(std::size_t(p.np) * std::size_t(p.np), std::size_t(p.np));
  for (int l = 0; l < p.nl; ++l) {
    const auto& pts = g.pts_on_line[std::size_t(l)];
    for (int a : pts)
      for (int b : pts)
        for (int x : pts)
          coll_.set(std::size_t(a) * std::size_t(np_) + std::size_t(b),
                    std::size_t(x));
  }
}

bool DeltaTables::delta(int k, int l, int a, int b) const {
  for (int x : g_->common_points(k, l))
    if (coll(a, b, x)) return true;
  return false;
}

// ---- relational checkers -----------------------------------------------------

namespace {

CheckResult fail(const char* what) {
  return CheckResult{CheckStatus::PremisesFail, what};
}
CheckResult holds() { return CheckResult{CheckStatus::Holds, ""}; }
CheckResult violated(const char* what) {
  return CheckResult{CheckStatus::Violated, what};
}

// exists u through a,b and v through c,d with u parallel to v
bool joins_parallel(const FinitePlane& p, const PlaneGeometry& g, int a, int b,
                    int c, int d) {
  for (int u : g.lines_thru_pt[std::size_t(a)]) {
    if (!p.in(b, u)) continue;
    for (int v : g.lines_thru_pt[std::size_t(c)])
      if (p.in(d, v) && p.par(u, v)) return true;
  }
  return false;
}

// exists u with base on u, u parallel to ref, target on u
bool on_parallel_through(const FinitePlane& p, const PlaneGeometry& g, int base,
                         int ref, int target) {
  for (int u : g.lines_thru_pt[std::size_t(base)])
    if (p.par(ref, u) && p.in(target, u)) return true;
  return false;
}

// exists u through a,b with d outside u
bool outside_join(const FinitePlane& p, const PlaneGeometry& g, int d, int a,
                  int b) {
  for (int u : g.lines_thru_pt[std::size_t(a)])
    if (p.in(b, u) && p.out(d, u)) return true;
  return false;
}

}  // namespace

CheckResult desargues_check(const FinitePlane& p, const PlaneGeometry& g,
                            const DeltaTables& dt, int a, int b, int c, int d,
                            int k, int l, int m, int n) {
  (void)g;
  if (!dt.delta(k, l, a, b)) return fail("delta(k,l,A,B)");
  if (!dt.delta(l, m, b, c)) return fail("delta(l,m,B,C)");
  if (!dt.delta(m, n, c, d)) return fail("delta(m,n,C,D)");
  if (!dt.delta(n, k, d, a)) return fail("delta(n,k,D,A)");
  if (!dt.delta(k, m, b, d)) return fail("delta(k,m,B,D)");
  if (!(p.li_apart(l, n) || p.pt_apart(a, c))) return fail("l#n or A#C");
  if (!(p.out(a, l) || p.out(a, n) || p.out(c, l) || p.out(c, n)))
    return fail("A or C outside one of l,n");
  if (!(p.out(b, k) || p.out(b, l) || p.out(b, m)))
    return fail("B outside one of k,l,m");
  if (!(p.out(d, m) || p.out(d, n) || p.out(d, k)))
    return fail("D outside one of m,n,k");
  if (!(p.out(d, k) || p.out(a, k) || p.out(b, k)))
    return fail("one of D,A,B outside k");
  if (!(p.out(b, m) || p.out(c, m) || p.out(d, m)))
    return fail("one of B,C,D outside m");
  return dt.delta(l, n, a, c) ? holds() : violated("delta(l,n,A,C) fails");
}

CheckResult pappus_check(const FinitePlane& p, const PlaneGeometry& g,
                         const DeltaTables& dt, const std::array<int, 6>& pt,
                         const std::array<int, 6>& li) {
  (void)g;
  static const char* names[6] = {"A,B on k_A", "B,C on k_B", "C,D on k_C",
                                 "D,E on k_D", "E,F on k_E", "F,A on k_F"};
  for (int i = 0; i < 6; ++i)
    if (!p.in(pt[std::size_t(i)], li[std::size_t(i)]) ||
        !p.in(pt[std::size_t((i + 1) % 6)], li[std::size_t(i)]))
      return fail(names[i]);
  if (!dt.delta(li[2], li[5], pt[1], pt[4])) return fail("delta(k_C,k_F,B,E)");
  if (!dt.delta(li[1], li[4], pt[0], pt[3])) return fail("delta(k_B,k_E,A,D)");
  bool pts_ap = p.pt_apart(pt[0], pt[1]) && p.pt_apart(pt[3], pt[4]);
  bool lis_ap = p.li_apart(li[1], li[2]) && p.li_apart(li[4], li[5]);
  if (!pts_ap && !lis_ap) return fail("(A#B and D#E) or (k_B#k_C and k_E#k_F)");
  if (!(p.li_apart(li[0], li[3]) || p.pt_apart(pt[5], pt[2])))
    return fail("k_A#k_D or F#C");
  if (!(p.out(pt[2], li[0]) || p.out(pt[2], li[3]) || p.out(pt[5], li[0]) ||
        p.out(pt[5], li[3])))
    return fail("C or F outside one of k_A,k_D");
  return dt.delta(li[0], li[3], pt[5], pt[2])
             ? holds()
             : violated("delta(k_A,k_D,F,C) fails");
}

CheckResult desargues_small_check(const FinitePlane& p, const PlaneGeometry& g,
                                  const DesarguesSmallConfig& c) {
  if (!p.par(c.k, c.l) || !p.par(c.l, c.m)) return fail("k || l || m");
  if (!p.par(c.n_a, c.n_a2)) return fail("n_A || n_A'");
  if (!p.par(c.n_c, c.n_c2)) return fail("n_C || n_C'");
  if (!p.in(c.a, c.n_a) || !p.in(c.b, c.n_a)) return fail("A,B on n_A");
  if (!p.in(c.b, c.n_c) || !p.in(c.c, c.n_c)) return fail("B,C on n_C");
  if (!p.in(c.a2, c.n_a2) || !p.in(c.b2, c.n_a2)) return fail("A',B' on n_A'");
  if (!p.in(c.b2, c.n_c2) || !p.in(c.c2, c.n_c2)) return fail("B',C' on n_C'");
  if (!p.in(c.a, c.k) || !p.in(c.a2, c.k)) return fail("A,A' on k");
  if (!p.in(c.b, c.l) || !p.in(c.b2, c.l)) return fail("B,B' on l");
  if (!p.in(c.c, c.m) || !p.in(c.c2, c.m)) return fail("C,C' on m");
  if (!p.pt_apart(c.a, c.c)) return fail("A#C");
  if (!p.pt_apart(c.a2, c.c2)) return fail("A'#C'");
  if (!p.li_apart(c.n_a, c.l)) return fail("n_A#l");
  if (!p.li_apart(c.n_c, c.l)) return fail("n_C#l");
  return joins_parallel(p, g, c.a, c.c, c.a2, c.c2)
             ? holds()
             : violated("AC not parallel to A'C'");
}

CheckResult desargues_big_check(const FinitePlane& p, const PlaneGeometry& g,
                                const DesarguesBigConfig& c) {
  if (!p.in(c.pp, c.k) || !p.in(c.pp, c.l) || !p.in(c.pp, c.m))
    return fail("P on k,l,m");
  if (!p.in(c.a, c.n_ab) || !p.in(c.b, c.n_ab)) return fail("A,B on n_AB");
  if (!p.in(c.b, c.n_bc) || !p.in(c.c, c.n_bc)) return fail("B,C on n_BC");
  if (!p.in(c.a, c.n_ac) || !p.in(c.c, c.n_ac)) return fail("A,C on n_AC");
  if (!p.in(c.a, c.k) || !p.in(c.a2, c.k)) return fail("A,A' on k");
  if (!p.in(c.b, c.l) || !p.in(c.b2, c.l)) return fail("B,B' on l");
  if (!p.in(c.c, c.m) || !p.in(c.c2, c.m)) return fail("C,C' on m");
  if (!p.out(c.pp, c.n_ab) || !p.out(c.pp, c.n_bc))
    return fail("P outside n_AB and n_BC");
  if (!on_parallel_through(p, g, c.a2, c.n_ab, c.b2))
    return fail("B' on the line through A' parallel to n_AB");
  if (!on_parallel_through(p, g, c.b2, c.n_bc, c.c2))
    return fail("C' on the line through B' parallel to n_BC");
  return on_parallel_through(p, g, c.a2, c.n_ac, c.c2)
             ? holds()
             : violated("C' not on the line through A' parallel to n_AC");
}

CheckResult pappus_affine_check(const FinitePlane& p, const PlaneGeometry& g,
                                const PappusAffineConfig& c) {
  if (!p.in(c.pp, c.k) || !p.in(c.a, c.k) || !p.in(c.b, c.k) ||
      !p.in(c.c, c.k))
    return fail("P,A,B,C on k");
  if (!p.in(c.pp, c.l) || !p.in(c.a2, c.l) || !p.in(c.b2, c.l) ||
      !p.in(c.c2, c.l))
    return fail("P,A',B',C' on l");
  if (!p.li_apart(c.k, c.l)) return fail("k#l");
  if (!p.pt_apart(c.a, c.pp) || !p.pt_apart(c.b, c.pp) ||
      !p.pt_apart(c.c, c.pp) || !p.pt_apart(c.a2, c.pp) ||
      !p.pt_apart(c.b2, c.pp) || !p.pt_apart(c.c2, c.pp))
    return fail("A,A',B,B',C,C' apart from P");
  if (!joins_parallel(p, g, c.a, c.b2, c.b, c.c2)) return fail("AB' || BC'");
  if (!joins_parallel(p, g, c.a2, c.b, c.b2, c.c)) return fail("A'B || B'C");
  return joins_parallel(p, g, c.a, c.a2, c.c, c.c2)
             ? holds()
             : violated("AA' not parallel to CC'");
}

DesarguesVariant desargues_variant_from_name(const std::string& name) {
  if (name == "parallel-3") return DesarguesVariant::Parallel3;
  if (name == "lempar-1") return DesarguesVariant::LemPar1;
  if (name == "lempar-2") return DesarguesVariant::LemPar2;
  if (name == "lempar-3") return DesarguesVariant::LemPar3;
  if (name == "lempar-4") return DesarguesVariant::LemPar4;
  if (name == "parallel-4") return DesarguesVariant::Parallel4;
  if (name == "concurrent-3") return DesarguesVariant::Concurrent3;
  if (name == "concurrent-4") return DesarguesVariant::Concurrent4;
  if (name == "five-point") return DesarguesVariant::FivePoint;
  throw Error("unknown desargues variant '" + name + "'");
}

CheckResult desargues_variant_check(const FinitePlane& p,
                                    const PlaneGeometry& g,
                                    DesarguesVariant variant,
                                    const std::vector<int>& pt,
                                    const std::vector<int>& li) {
  auto need = [&](std::size_t npt, std::size_t nli) {
    if (pt.size() != npt || li.size() != nli)
      throw Error("desargues variant: bad configuration size");
  };
  switch (variant) {
    case DesarguesVariant::Parallel3: {
      // pt = A,A',B,B',C,C'; li = k,l,m
      need(6, 3);
      int a = pt[0], a2 = pt[1], b = pt[2], b2 = pt[3], c = pt[4], c2 = pt[5];
      int k = li[0], l = li[1], m = li[2];
      if (!p.par(k, l) || !p.par(l, m)) return fail("k || l || m");
      if (!p.li_apart(k, l) || !p.li_apart(l, m)) return fail("k#l#m");
      if (!p.pt_apart(a, c)) return fail("A#C");
      if (!p.pt_apart(a2, c2)) return fail("A'#C'");
      if (!p.in(a, k) || !p.in(a2, k)) return fail("A,A' on k");
      if (!p.in(b, l) || !p.in(b2, l)) return fail("B,B' on l");
      if (!p.in(c, m) || !p.in(c2, m)) return fail("C,C' on m");
      if (!joins_parallel(p, g, a, b, a2, b2)) return fail("AB || A'B'");
      if (!joins_parallel(p, g, b, c, b2, c2)) return fail("BC || B'C'");
      return joins_parallel(p, g, a, c, a2, c2) ? holds()
                                                : violated("AC not || A'C'");
    }
    case DesarguesVariant::LemPar1: {
      // pt = A0,A1,A2,B0,B1,B2; li = k,l
      need(6, 2);
      int k = li[0], l = li[1];
      if (!p.li_apart(k, l)) return fail("k#l");
      if (!p.par(k, l)) return fail("k || l");
      if (!p.pt_apart(pt[0], pt[1]) || !p.pt_apart(pt[1], pt[2]))
        return fail("A0#A1#A2");
      if (!p.pt_apart(pt[3], pt[4]) || !p.pt_apart(pt[4], pt[5]))
        return fail("B0#B1#B2");
      for (int i = 0; i < 3; ++i)
        if (!p.in(pt[std::size_t(i)], k)) return fail("A0,A1,A2 on k");
      for (int i = 3; i < 6; ++i)
        if (!p.in(pt[std::size_t(i)], l)) return fail("B0,B1,B2 on l");
      if (!joins_parallel(p, g, pt[0], pt[3], pt[1], pt[4]) ||
          !joins_parallel(p, g, pt[1], pt[4], pt[2], pt[5]))
        return fail("A0B0 || A1B1 || A2B2");
      if (!joins_parallel(p, g, pt[1], pt[3], pt[2], pt[4]))
        return fail("A1B0 || A2B1");
      return joins_parallel(p, g, pt[0], pt[4], pt[1], pt[5])
                 ? holds()
                 : violated("A0B1 not || A1B2");
    }
    case DesarguesVariant::LemPar2:
    case DesarguesVariant::LemPar3:
    case DesarguesVariant::LemPar4: {
      // pt = A,B,C,D,A',B',C',D'; li = k,l
      need(8, 2);
      int a = pt[0], b = pt[1], c = pt[2], d = pt[3];
      int a2 = pt[4], b2 = pt[5], c2 = pt[6], d2 = pt[7];
      int k = li[0], l = li[1];
      if (!p.li_apart(k, l)) return fail("k#l");
      if (!p.par(k, l)) return fail("k || l");
      if (variant == DesarguesVariant::LemPar2) {
        if (!p.pt_apart(a, c) || !p.pt_apart(b, d) || !p.pt_apart(a2, c2) ||
            !p.pt_apart(b2, d2))
          return fail("A#C, B#D, A'#C', B'#D'");
      } else if (variant == DesarguesVariant::LemPar3) {
        if (!p.pt_apart(b, d)) return fail("B#D");
      }
      if (!p.in(a, k) || !p.in(a2, k) || !p.in(c, k) || !p.in(c2, k))
        return fail("A,A',C,C' on k");
      if (!p.in(b, l) || !p.in(b2, l) || !p.in(d, l) || !p.in(d2, l))
        return fail("B,B',D,D' on l");
      if (variant == DesarguesVariant::LemPar2) {
        if (!joins_parallel(p, g, a, b, c, d) ||
            !joins_parallel(p, g, c, d, a2, b2) ||
            !joins_parallel(p, g, a2, b2, c2, d2))
          return fail("AB || CD || A'B' || C'D'");
        if (!joins_parallel(p, g, b, c, b2, c2)) return fail("BC || B'C'");
      } else {
        if (!joins_parallel(p, g, a, b, a2, b2)) return fail("AB || A'B'");
        if (!joins_parallel(p, g, b, c, b2, c2)) return fail("BC || B'C'");
        if (!joins_parallel(p, g, c, d, c2, d2)) return fail("CD || C'D'");
      }
      return joins_parallel(p, g, a, d, a2, d2) ? holds()
                                                : violated("AD not || A'D'");
    }
    case DesarguesVariant::Parallel4: {
      // pt = A,B,C,D,A',B',C',D'; li = k,l,m,n
      need(8, 4);
      int a = pt[0], b = pt[1], c = pt[2], d = pt[3];
      int a2 = pt[4], b2 = pt[5], c2 = pt[6], d2 = pt[7];
      int k = li[0], l = li[1], m = li[2], n = li[3];
      if (!p.par(k, l) || !p.par(l, m) || !p.par(m, n))
        return fail("k,l,m,n parallel");
      if (!p.li_apart(k, l) || !p.li_apart(l, m) || !p.li_apart(m, n))
        return fail("k#l#m#n");
      if (!p.pt_apart(a, d)) return fail("A#D");
      if (!p.pt_apart(a2, d2)) return fail("A'#D'");
      if (!p.in(a, k) || !p.in(a2, k)) return fail("A,A' on k");
      if (!p.in(b, l) || !p.in(b2, l)) return fail("B,B' on l");
      if (!p.in(c, m) || !p.in(c2, m)) return fail("C,C' on m");
      if (!p.in(d, n) || !p.in(d2, n)) return fail("D,D' on n");
      if (!joins_parallel(p, g, a, b, a2, b2)) return fail("AB || A'B'");
      if (!joins_parallel(p, g, b, c, b2, c2)) return fail("BC || B'C'");
      if (!joins_parallel(p, g, c, d, c2, d2)) return fail("CD || C'D'");
      return joins_parallel(p, g, a, d, a2, d2) ? holds()
                                                : violated("AD not || A'D'");
    }
    case DesarguesVariant::Concurrent3: {
      // pt = P,A,A',B,B',C,C'; li = k,l,m
      need(7, 3);
      int pp = pt[0], a = pt[1], a2 = pt[2], b = pt[3], b2 = pt[4], c = pt[5],
          c2 = pt[6];
      int k = li[0], l = li[1], m = li[2];
      if (!p.in(pp, k) || !p.in(pp, l) || !p.in(pp, m)) return fail("P on k,l,m");
      if (!p.li_apart(k, l) || !p.li_apart(l, m)) return fail("k#l#m");
      for (int i = 1; i < 7; ++i)
        if (!p.pt_apart(pp, pt[std::size_t(i)]))
          return fail("P apart from A,A',B,B',C,C'");
      if (!p.in(a, k) || !p.in(a2, k)) return fail("A,A' on k");
      if (!p.in(b, l) || !p.in(b2, l)) return fail("B,B' on l");
      if (!p.in(c, m) || !p.in(c2, m)) return fail("C,C' on m");
      if (!p.pt_apart(a, c) || !p.pt_apart(a2, c2)) return fail("A#C and A'#C'");
      if (!joins_parallel(p, g, a, b, a2, b2)) return fail("AB || A'B'");
      if (!joins_parallel(p, g, b, c, b2, c2)) return fail("BC || B'C'");
      return joins_parallel(p, g, a, c, a2, c2) ? holds()
                                                : violated("AC not || A'C'");
    }
    case DesarguesVariant::Concurrent4: {
      // pt = P,A,B,C,D,A',B',C',D'; li = k,l,m,n
      need(9, 4);
      int pp = pt[0];
      int a = pt[1], b = pt[2], c = pt[3], d = pt[4];
      int a2 = pt[5], b2 = pt[6], c2 = pt[7], d2 = pt[8];
      int k = li[0], l = li[1], m = li[2], n = li[3];
      if (!p.in(pp, k) || !p.in(pp, l) || !p.in(pp, m) || !p.in(pp, n))
        return fail("P on k,l,m,n");
      if (!p.li_apart(k, l) || !p.li_apart(l, m) || !p.li_apart(m, n))
        return fail("k#l#m#n");
      if (!p.pt_apart(a, d)) return fail("A#D");
      if (!p.pt_apart(a2, d2)) return fail("A'#D'");
      for (int i = 1; i < 9; ++i)
        if (!p.pt_apart(pp, pt[std::size_t(i)]))
          return fail("P apart from the eight points");
      if (!p.in(a, k) || !p.in(a2, k)) return fail("A,A' on k");
      if (!p.in(b, l) || !p.in(b2, l)) return fail("B,B' on l");
      if (!p.in(c, m) || !p.in(c2, m)) return fail("C,C' on m");
      if (!p.in(d, n) || !p.in(d2, n)) return fail("D,D' on n");
      if (!joins_parallel(p, g, a, b, a2, b2)) return fail("AB || A'B'");
      if (!joins_parallel(p, g, b, c, b2, c2)) return fail("BC || B'C'");
      if (!joins_parallel(p, g, c, d, c2, d2)) return fail("CD || C'D'");
      return joins_parallel(p, g, a, d, a2, d2) ? holds()
                                                : violated("AD not || A'D'");
    }
    case DesarguesVariant::FivePoint: {
      // pt = P,A,A',B,B',C,C',D,D'; li = k,l,m
      need(9, 3);
      int pp = pt[0], a = pt[1], a2 = pt[2], b = pt[3], b2 = pt[4], c = pt[5],
          c2 = pt[6], d = pt[7], d2 = pt[8];
      int k = li[0], l = li[1], m = li[2];
      if (!p.in(pp, k) || !p.in(pp, l) || !p.in(pp, m)) return fail("P on k,l,m");
      if (!p.li_apart(k, l) || !p.li_apart(l, m)) return fail("k#l#m");
      for (int i = 1; i < 7; ++i)
        if (!p.pt_apart(pp, pt[std::size_t(i)]))
          return fail("P apart from A,A',B,B',C,C'");
      if (!p.in(a, k) || !p.in(a2, k)) return fail("A,A' on k");
      if (!p.in(b, l) || !p.in(b2, l)) return fail("B,B' on l");
      if (!p.in(c, m) || !p.in(c2, m)) return fail("C,C' on m");
      if (!outside_join(p, g, d, a, b) || !outside_join(p, g, d, b, c))
        return fail("D outside AB and BC");
      if (!outside_join(p, g, d2, a2, b2) || !outside_join(p, g, d2, b2, c2))
        return fail("D' outside A'B' and B'C'");
      if (!joins_parallel(p, g, a, b, a2, b2)) return fail("AB || A'B'");
      if (!joins_parallel(p, g, b, c, b2, c2)) return fail("BC || B'C'");
      if (!joins_parallel(p, g, b, d, b2, d2)) return fail("BD || B'D'");
      if (!joins_parallel(p, g, c, d, c2, d2)) return fail("CD || C'D'");
      return joins_parallel(p, g, a, d, a2, d2) ? holds()
                                                : violated("AD not || A'D'");
    }
  }
  throw Error("bad desargues variant");
}

// ---- coherent axiom loops -----------------------------------------------------

namespace {

using Outcomes = std::vector<AxiomOutcome>;

void push(Outcomes& out, std::string name, bool pass, std::string witness,
          std::uint64_t n = 0, std::string mode = "exhaustive") {
  AxiomOutcome a;
  a.name = std::move(name);
  a.pass = pass;
  a.witness = std::move(witness);
  a.mode = std::move(mode);
  a.configurations = n;
  out.push_back(std::move(a));
}

void check_apartness(Outcomes& out, const char* prefix, int n,
                     const BitMat& rel, const char* tag) {
  // irreflexive
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      if (rel.get(std::size_t(a), std::size_t(a))) {
        ok = false;
        w = wit(tag, a);
      }
    push(out, std::string(prefix) + "_irreflexive", ok, w);
  }
  // symmetric
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (rel.get(std::size_t(a), std::size_t(b)) &&
            !rel.get(std::size_t(b), std::size_t(a))) {
          ok = false;
          w = wit(tag, a, tag, b);
        }
    push(out, std::string(prefix) + "_symmetric", ok, w);
  }
  // cotransitive
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (!rel.get(std::size_t(a), std::size_t(b))) continue;
        for (int c = 0; c < n; ++c)
          if (!rel.get(std::size_t(a), std::size_t(c)) &&
              !rel.get(std::size_t(b), std::size_t(c))) {
            ok = false;
            w = wit(tag, a, tag, b, tag, c);
            break;
          }
        if (!ok) break;
      }
    push(out, std::string(prefix) + "_cotransitive", ok, w);
  }
}

void check_common_axioms(Outcomes& out, const FinitePlane& p,
                         const PlaneGeometry& g) {
  check_apartness(out, "apart_pt", p.np, p.apart_pt, "pt");
  check_apartness(out, "apart_li", p.nl, p.apart_li, "li");

  {  // incident and outside disjoint
    bool ok = true;
    std::string w;
    for (int a = 0; a < p.np && ok; ++a)
      for (int l = 0; l < p.nl && ok; ++l)
        if (p.in(a, l) && p.out(a, l)) {
          ok = false;
          w = wit("pt", a, "li", l);
        }
    push(out, "incident_outside_disjoint", ok, w);
  }
  {  // A notin k |- A#B or B notin k
    bool ok = true;
    std::string w;
    for (int a = 0; a < p.np && ok; ++a)
      for (int k = 0; k < p.nl && ok; ++k) {
        if (!p.out(a, k)) continue;
        for (int b = 0; b < p.np; ++b)
          if (!p.pt_apart(a, b) && !p.out(b, k)) {
            ok = false;
            w = wit("pt", a, "pt", b, "li", k);
            break;
          }
      }
    push(out, "outside_point_split", ok, w);
  }
  {  // A notin k |- k#l or A notin l
    bool ok = true;
    std::string w;
    for (int a = 0; a < p.np && ok; ++a)
      for (int k = 0; k < p.nl && ok; ++k) {
        if (!p.out(a, k)) continue;
        for (int l = 0; l < p.nl; ++l)
          if (!p.li_apart(k, l) && !p.out(a, l)) {
            ok = false;
            w = wit("pt", a, "li", k, "li", l);
            break;
          }
      }
    push(out, "outside_line_split", ok, w);
  }
  {  // join exists
    bool ok = true;
    std::string w;
    for (int a = 0; a < p.np && ok; ++a)
      for (int b = 0; b < p.np && ok; ++b)
        if (p.pt_apart(a, b) && g.join(a, b) == -1) {
          ok = false;
          w = wit("pt", a, "pt", b);
        }
    push(out, "join_exists", ok, w);
  }
  {  // join unique
    bool ok = true;
    std::string w;
    for (int a = 0; a < p.np && ok; ++a)
      for (int b = 0; b < p.np && ok; ++b)
        if (p.pt_apart(a, b) && g.join(a, b) == -2) {
          ok = false;
          w = wit("pt", a, "pt", b);
        }
    push(out, "join_unique", ok, w);
  }
  {  // two apart lines share at most one point
    bool ok = true;
    std::string w;
    for (int k = 0; k < p.nl && ok; ++k)
      for (int l = 0; l < p.nl && ok; ++l)
        if (p.li_apart(k, l) && g.common_points(k, l).size() > 1) {
          ok = false;
          w = wit("li", k, "li", l);
        }
    push(out, "meet_unique", ok, w);
  }
  {  // some point off every line
    bool ok = true;
    std::string w;
    for (int l = 0; l < p.nl && ok; ++l)
      if (g.first_point_outside(l) < 0) {
        ok = false;
        w = wit("li", l);
      }
    push(out, "point_off_line", ok, w);
  }
  {  // nondegeneracy: A#B on l with C outside l
    bool found = false;
    for (int l = 0; l < p.nl && !found; ++l) {
      const auto& pts = g.pts_on_line[std::size_t(l)];
      bool pair_ok = false;
      for (std::size_t i = 0; i < pts.size() && !pair_ok; ++i)
        for (std::size_t j = 0; j < pts.size() && !pair_ok; ++j)
          if (p.pt_apart(pts[i], pts[j])) pair_ok = true;
      if (pair_ok && g.first_point_outside(l) >= 0) found = true;
    }
    push(out, "plane_nondegenerate", found, "");
  }
}

}  // namespace

// ---- projective Desargues / Pappus drivers ------------------------------------

namespace {

struct DPResult {
  bool pass = true;
  std::string witness;
  std::uint64_t configurations = 0;
  bool completed = true;  // false when the exhaustive budget blew
};

DPResult exhaustive_proj_desargues(const FinitePlane& p, const PlaneGeometry& g,
                                   const DeltaTables& dt, Budget& budget) {
  DPResult r;
  for (int k = 0; k < p.nl; ++k)
    for (int l = 0; l < p.nl; ++l)
      for (int a = 0; a < p.np; ++a)
        for (int b = 0; b < p.np; ++b) {
          if (!budget.step()) {
            r.completed = false;
            return r;
          }
          if (!dt.delta(k, l, a, b)) continue;
          for (int m = 0; m < p.nl; ++m)
            for (int c = 0; c < p.np; ++c) {
              if (!budget.step()) {
                r.completed = false;
                return r;
              }
              if (!dt.delta(l, m, b, c)) continue;
              for (int n = 0; n < p.nl; ++n)
                for (int d = 0; d < p.np; ++d) {
                  if (!budget.step()) {
                    r.completed = false;
                    return r;
                  }
                  if (!dt.delta(m, n, c, d)) continue;
                  if (!dt.delta(n, k, d, a)) continue;
                  if (!dt.delta(k, m, b, d)) continue;
                  auto res = desargues_check(p, g, dt, a, b, c, d, k, l, m, n);
                  if (res.status == CheckStatus::PremisesFail) continue;
                  ++r.configurations;
                  if (res.status == CheckStatus::Violated) {
                    r.pass = false;
                    r.witness = wit("pt", a, "pt", b, "pt", c, "pt", d, "li",
                                    k, "li", l, "li", m, "li", n);
                    return r;
                  }
                }
            }
        }
  return r;
}

DPResult sampled_proj_desargues(const FinitePlane& p, const PlaneGeometry& g,
                                const DeltaTables& dt, std::uint64_t seed,
                                std::uint64_t samples) {
  DPResult r;
  Rng rng(seed ^ 0xdeda6011u);
  std::uint64_t draws = 0, max_draws = samples * 100;
  while (r.configurations < samples && draws < max_draws) {
    ++draws;
    if (p.np == 0 || p.nl == 0) break;
    int x1 = int(rng.below(std::uint64_t(p.np)));
    const auto& thru1 = g.lines_thru_pt[std::size_t(x1)];
    if (thru1.empty()) continue;
    int k = rng.pick(thru1), l = rng.pick(thru1), r1 = rng.pick(thru1);
    const auto& on_r1 = g.pts_on_line[std::size_t(r1)];
    if (on_r1.empty()) continue;
    int a = rng.pick(on_r1), b = rng.pick(on_r1);

    const auto& on_l = g.pts_on_line[std::size_t(l)];
    if (on_l.empty()) continue;
    int x2 = rng.pick(on_l);
    const auto& thru2 = g.lines_thru_pt[std::size_t(x2)];
    if (thru2.empty()) continue;
    int m = rng.pick(thru2);
    auto r2s = g.lines_containing(x2, b);
    if (r2s.empty()) continue;
    int r2 = rng.pick(r2s);
    int c = rng.pick(g.pts_on_line[std::size_t(r2)]);

    const auto& on_m = g.pts_on_line[std::size_t(m)];
    if (on_m.empty()) continue;
    int x3 = rng.pick(on_m);
    const auto& thru3 = g.lines_thru_pt[std::size_t(x3)];
    if (thru3.empty()) continue;
    int n = rng.pick(thru3);
    auto r3s = g.lines_containing(x3, c);
    if (r3s.empty()) continue;
    int r3 = rng.pick(r3s);
    int d = rng.pick(g.pts_on_line[std::size_t(r3)]);

    auto res = desargues_check(p, g, dt, a, b, c, d, k, l, m, n);
    if (res.status == CheckStatus::PremisesFail) continue;
    ++r.configurations;
    if (res.status == CheckStatus::Violated) {
      r.pass = false;
      r.witness = wit("pt", a, "pt", b, "pt", c, "pt", d, "li", k, "li", l,
                      "li", m, "li", n);
      return r;
    }
  }
  return r;
}

DPResult exhaustive_proj_pappus(const FinitePlane& p, const PlaneGeometry& g,
                                const DeltaTables& dt, Budget& budget) {
  DPResult r;
  for (int ka = 0; ka < p.nl; ++ka) {
    for (int a : g.pts_on_line[std::size_t(ka)])
      for (int b : g.pts_on_line[std::size_t(ka)])
        for (int kb : g.lines_thru_pt[std::size_t(b)])
          for (int c : g.pts_on_line[std::size_t(kb)])
            for (int kc : g.lines_thru_pt[std::size_t(c)])
              for (int d : g.pts_on_line[std::size_t(kc)])
                for (int kd : g.lines_thru_pt[std::size_t(d)])
                  for (int e : g.pts_on_line[std::size_t(kd)]) {
                    if (!budget.step()) {
                      r.completed = false;
                      return r;
                    }
                    for (int ke : g.lines_thru_pt[std::size_t(e)]) {
                      if (!dt.delta(kb, ke, a, d)) continue;
                      for (int f : g.pts_on_line[std::size_t(ke)])
                        for (int kf : g.lines_thru_pt[std::size_t(f)]) {
                          if (!budget.step()) {
                            r.completed = false;
                            return r;
                          }
                          if (!p.in(a, kf)) continue;
                          auto res = pappus_check(p, g, dt,
                                                  {a, b, c, d, e, f},
                                                  {ka, kb, kc, kd, ke, kf});
                          if (res.status == CheckStatus::PremisesFail) continue;
                          ++r.configurations;
                          if (res.status == CheckStatus::Violated) {
                            r.pass = false;
                            r.witness =
                                wit("pt", a, "pt", b, "pt", c, "pt", d, "pt",
                                    e, "pt", f, "li", ka, "li", kb, "li", kc,
                                    "li", kd, "li", ke, "li", kf);
                            return r;
                          }
                        }
                    }
                  }
  }
  return r;
}

DPResult sampled_proj_pappus(const FinitePlane& p, const PlaneGeometry& g,
                             const DeltaTables& dt, std::uint64_t seed,
                             std::uint64_t samples) {
  DPResult r;
  Rng rng(seed ^ 0x9a995ull);
  std::uint64_t draws = 0, max_draws = samples * 100;
  while (r.configurations < samples && draws < max_draws) {
    ++draws;
    if (p.np == 0 || p.nl == 0) break;
    int x1 = int(rng.below(std::uint64_t(p.np)));
    int x2 = int(rng.below(std::uint64_t(p.np)));
    const auto& thru1 = g.lines_thru_pt[std::size_t(x1)];
    const auto& thru2 = g.lines_thru_pt[std::size_t(x2)];
    if (thru1.empty() || thru2.empty()) continue;
    int kc = rng.pick(thru1), kf = rng.pick(thru1);
    int kb = rng.pick(thru2), ke = rng.pick(thru2);

    const auto& on_kf = g.pts_on_line[std::size_t(kf)];
    if (on_kf.empty()) continue;
    int a = rng.pick(on_kf);
    auto r2s = g.lines_containing(a, x2);
    if (r2s.empty()) continue;
    int r2 = rng.pick(r2s);
    std::vector<int> dcand;
    for (int x : g.pts_on_line[std::size_t(r2)])
      if (p.in(x, kc)) dcand.push_back(x);
    if (dcand.empty()) continue;
    int d = rng.pick(dcand);

    const auto& cs = g.common_points(kb, kc);
    if (cs.empty()) continue;
    int c = cs[std::size_t(rng.below(cs.size()))];

    const auto& on_ke = g.pts_on_line[std::size_t(ke)];
    if (on_ke.empty()) continue;
    int e = rng.pick(on_ke);
    auto r1s = g.lines_containing(e, x1);
    if (r1s.empty()) continue;
    int r1 = rng.pick(r1s);
    std::vector<int> bcand;
    for (int x : g.pts_on_line[std::size_t(r1)])
      if (p.in(x, kb)) bcand.push_back(x);
    if (bcand.empty()) continue;
    int b = rng.pick(bcand);

    const auto& fs = g.common_points(ke, kf);
    if (fs.empty()) continue;
    int f = fs[std::size_t(rng.below(fs.size()))];

    auto kas = g.lines_containing(a, b);
    auto kds = g.lines_containing(d, e);
    if (kas.empty() || kds.empty()) continue;
    int ka = rng.pick(kas), kd = rng.pick(kds);

    auto res =
        pappus_check(p, g, dt, {a, b, c, d, e, f}, {ka, kb, kc, kd, ke, kf});
    if (res.status == CheckStatus::PremisesFail) continue;
    ++r.configurations;
    if (res.status == CheckStatus::Violated) {
      r.pass = false;
      r.witness = wit("pt", a, "pt", b, "pt", c, "pt", d, "pt", e, "pt", f,
                      "li", ka, "li", kb, "li", kc, "li", kd, "li", ke, "li",
                      kf);
      return r;
    }
  }
  return r;
}

// ---- affine Desargues / Pappus drivers ----------------------------------------

std::vector<int> lines_through_parallel(const FinitePlane& p,
                                        const PlaneGeometry& g, int pt,
                                        int ref) {
  std::vector<int> out;
  for (int u : g.lines_thru_pt[std::size_t(pt)])
    if (p.par(ref, u)) out.push_back(u);
  return out;
}

DPResult exhaustive_aff_small(const FinitePlane& p, const PlaneGeometry& g,
                              Budget& budget) {
  DPResult r;
  DesarguesSmallConfig c{};
  for (int k = 0; k < p.nl; ++k)
    for (int l = 0; l < p.nl; ++l) {
      if (!p.par(k, l)) continue;
      for (int m = 0; m < p.nl; ++m) {
        if (!p.par(l, m)) continue;
        for (int a : g.pts_on_line[std::size_t(k)])
          for (int b : g.pts_on_line[std::size_t(l)])
            for (int na : g.lines_containing(a, b)) {
              if (!p.li_apart(na, l)) continue;
              for (int cc : g.pts_on_line[std::size_t(m)]) {
                if (!budget.step()) {
                  r.completed = false;
                  return r;
                }
                if (!p.pt_apart(a, cc)) continue;
                for (int nc : g.lines_containing(b, cc)) {
                  if (!p.li_apart(nc, l)) continue;
                  for (int a2 : g.pts_on_line[std::size_t(k)])
                    for (int na2 : lines_through_parallel(p, g, a2, na))
                      for (int b2 : g.common_points(na2, l))
                        for (int nc2 : lines_through_parallel(p, g, b2, nc))
                          for (int c2 : g.common_points(nc2, m)) {
                            if (!budget.step()) {
                              r.completed = false;
                              return r;
                            }
                            c = {k, l, m, na, na2, nc, nc2,
                                 a, a2, b, b2, cc, c2};
                            auto res = desargues_small_check(p, g, c);
                            if (res.status == CheckStatus::PremisesFail)
                              continue;
                            ++r.configurations;
                            if (res.status == CheckStatus::Violated) {
                              r.pass = false;
                              r.witness = wit("pt", a, "pt", a2, "pt", b, "pt",
                                              b2, "pt", cc, "pt", c2, "li", k,
                                              "li", l, "li", m);
                              return r;
                            }
                          }
                }
              }
            }
      }
    }
  return r;
}

DPResult sampled_aff_small(const FinitePlane& p, const PlaneGeometry& g,
                           std::uint64_t seed, std::uint64_t samples) {
  DPResult r;
  Rng rng(seed ^ 0x5aa11ull);
  std::uint64_t draws = 0, max_draws = samples * 100;
  std::vector<std::vector<int>> par_of(std::size_t(p.nl));
  for (int k = 0; k < p.nl; ++k)
    for (int l = 0; l < p.nl; ++l)
      if (p.par(k, l)) par_of[std::size_t(k)].push_back(l);
  while (r.configurations < samples && draws < max_draws) {
    ++draws;
    if (p.nl == 0) break;
    int k = int(rng.below(std::uint64_t(p.nl)));
    if (par_of[std::size_t(k)].empty()) continue;
    int l = rng.pick(par_of[std::size_t(k)]);
    int m = rng.pick(par_of[std::size_t(l)]);
    const auto& onk = g.pts_on_line[std::size_t(k)];
    const auto& onl = g.pts_on_line[std::size_t(l)];
    const auto& onm = g.pts_on_line[std::size_t(m)];
    if (onk.empty() || onl.empty() || onm.empty()) continue;
    int a = rng.pick(onk), b = rng.pick(onl), cc = rng.pick(onm);
    auto nas = g.lines_containing(a, b);
    auto ncs = g.lines_containing(b, cc);
    if (nas.empty() || ncs.empty()) continue;
    int na = rng.pick(nas), nc = rng.pick(ncs);
    int a2 = rng.pick(onk);
    auto na2s = lines_through_parallel(p, g, a2, na);
    if (na2s.empty()) continue;
    int na2 = rng.pick(na2s);
    const auto& b2s = g.common_points(na2, l);
    if (b2s.empty()) continue;
    int b2 = b2s[std::size_t(rng.below(b2s.size()))];
    auto nc2s = lines_through_parallel(p, g, b2, nc);
    if (nc2s.empty()) continue;
    int nc2 = rng.pick(nc2s);
    const auto& c2s = g.common_points(nc2, m);
    if (c2s.empty()) continue;
    int c2 = c2s[std::size_t(rng.below(c2s.size()))];
    auto res = desargues_small_check(
        p, g, DesarguesSmallConfig{k, l, m, na, na2, nc, nc2, a, a2, b, b2, cc,
                                   c2});
    if (res.status == CheckStatus::PremisesFail) continue;
    ++r.configurations;
    if (res.status == CheckStatus::Violated) {
      r.pass = false;
      r.witness = wit("pt", a, "pt", a2, "pt", b, "pt", b2, "pt", cc, "pt", c2,
                      "li", k, "li", l, "li", m);
      return r;
    }
  }
  return r;
}

DPResult exhaustive_aff_big(const FinitePlane& p, const PlaneGeometry& g,
                            Budget& budget) {
  DPResult r;
  for (int pp = 0; pp < p.np; ++pp)
    for (int k : g.lines_thru_pt[std::size_t(pp)])
      for (int l : g.lines_thru_pt[std::size_t(pp)])
        for (int m : g.lines_thru_pt[std::size_t(pp)])
          for (int a : g.pts_on_line[std::size_t(k)])
            for (int b : g.pts_on_line[std::size_t(l)])
              for (int nab : g.lines_containing(a, b)) {
                if (!budget.step()) {
                  r.completed = false;
                  return r;
                }
                if (!p.out(pp, nab)) continue;
                for (int cc : g.pts_on_line[std::size_t(m)])
                  for (int nbc : g.lines_containing(b, cc)) {
                    if (!p.out(pp, nbc)) continue;
                    for (int nac : g.lines_containing(a, cc))
                      for (int a2 : g.pts_on_line[std::size_t(k)])
                        for (int u : lines_through_parallel(p, g, a2, nab))
                          for (int b2 : g.common_points(u, l)) {
                            for (int v :
                                 lines_through_parallel(p, g, b2, nbc))
                              for (int c2 : g.common_points(v, m)) {
                                if (!budget.step()) {
                                  r.completed = false;
                                  return r;
                                }
                                auto res = desargues_big_check(
                                    p, g,
                                    DesarguesBigConfig{k, l, m, nab, nbc, nac,
                                                       pp, a, a2, b, b2, cc,
                                                       c2});
                                if (res.status == CheckStatus::PremisesFail)
                                  continue;
                                ++r.configurations;
                                if (res.status == CheckStatus::Violated) {
                                  r.pass = false;
                                  r.witness =
                                      wit("pt", pp, "pt", a, "pt", a2, "pt", b,
                                          "pt", b2, "pt", cc, "pt", c2, "li",
                                          k, "li", l, "li", m);
                                  return r;
                                }
                              }
                          }
                  }
              }
  return r;
}

DPResult sampled_aff_big(const FinitePlane& p, const PlaneGeometry& g,
                         std::uint64_t seed, std::uint64_t samples) {
  DPResult r;
  Rng rng(seed ^ 0xb16b16ull);
  std::uint64_t draws = 0, max_draws = samples * 100;
  while (r.configurations < samples && draws < max_draws) {
    ++draws;
    if (p.np == 0) break;
    int pp = int(rng.below(std::uint64_t(p.np)));
    const auto& thru = g.lines_thru_pt[std::size_t(pp)];
    if (thru.empty()) continue;
    int k = rng.pick(thru), l = rng.pick(thru), m = rng.pick(thru);
    const auto& onk = g.pts_on_line[std::size_t(k)];
    const auto& onl = g.pts_on_line[std::size_t(l)];
    const auto& onm = g.pts_on_line[std::size_t(m)];
    if (onk.empty() || onl.empty() || onm.empty()) continue;
    int a = rng.pick(onk), a2 = rng.pick(onk), b = rng.pick(onl),
        cc = rng.pick(onm);
    auto nabs = g.lines_containing(a, b);
    auto nbcs = g.lines_containing(b, cc);
    auto nacs = g.lines_containing(a, cc);
    if (nabs.empty() || nbcs.empty() || nacs.empty()) continue;
    int nab = rng.pick(nabs), nbc = rng.pick(nbcs), nac = rng.pick(nacs);
    auto us = lines_through_parallel(p, g, a2, nab);
    if (us.empty()) continue;
    const auto& b2s = g.common_points(us[std::size_t(rng.below(us.size()))], l);
    if (b2s.empty()) continue;
    int b2 = b2s[std::size_t(rng.below(b2s.size()))];
    auto vs = lines_through_parallel(p, g, b2, nbc);
    if (vs.empty()) continue;
    const auto& c2s = g.common_points(vs[std::size_t(rng.below(vs.size()))], m);
    if (c2s.empty()) continue;
    int c2 = c2s[std::size_t(rng.below(c2s.size()))];
    auto res = desargues_big_check(
        p, g,
        DesarguesBigConfig{k, l, m, nab, nbc, nac, pp, a, a2, b, b2, cc, c2});
    if (res.status == CheckStatus::PremisesFail) continue;
    ++r.configurations;
    if (res.status == CheckStatus::Violated) {
      r.pass = false;
      r.witness = wit("pt", pp, "pt", a, "pt", a2, "pt", b, "pt", b2, "pt", cc,
                      "pt", c2, "li", k, "li", l, "li", m);
      return r;
    }
  }
  return r;
}

DPResult exhaustive_aff_pappus(const FinitePlane& p, const PlaneGeometry& g,
                               Budget& budget) {
  DPResult r;
  for (int k = 0; k < p.nl; ++k)
    for (int l = 0; l < p.nl; ++l) {
      if (!p.li_apart(k, l)) continue;
      for (int pp : g.common_points(k, l))
        for (int a : g.pts_on_line[std::size_t(k)])
          for (int b : g.pts_on_line[std::size_t(k)])
            for (int cc : g.pts_on_line[std::size_t(k)]) {
              if (!budget.step()) {
                r.completed = false;
                return r;
              }
              if (!p.pt_apart(a, pp) || !p.pt_apart(b, pp) ||
                  !p.pt_apart(cc, pp))
                continue;
              for (int a2 : g.pts_on_line[std::size_t(l)])
                for (int b2 : g.pts_on_line[std::size_t(l)])
                  for (int c2 : g.pts_on_line[std::size_t(l)]) {
                    if (!budget.step()) {
                      r.completed = false;
                      return r;
                    }
                    auto res = pappus_affine_check(
                        p, g,
                        PappusAffineConfig{k, l, pp, a, b, cc, a2, b2, c2});
                    if (res.status == CheckStatus::PremisesFail) continue;
                    ++r.configurations;
                    if (res.status == CheckStatus::Violated) {
                      r.pass = false;
                      r.witness = wit("pt", pp, "pt", a, "pt", b, "pt", cc,
                                      "pt", a2, "pt", b2, "pt", c2, "li", k,
                                      "li", l);
                      return r;
                    }
                  }
            }
    }
  return r;
}

DPResult sampled_aff_pappus(const FinitePlane& p, const PlaneGeometry& g,
                            std::uint64_t seed, std::uint64_t samples) {
  DPResult r;
  Rng rng(seed ^ 0xaffa99ull);
  std::uint64_t draws = 0, max_draws = samples * 100;
  while (r.configurations < samples && draws < max_draws) {
    ++draws;
    if (p.nl == 0) break;
    int k = int(rng.below(std::uint64_t(p.nl)));
    int l = int(rng.below(std::uint64_t(p.nl)));
    if (!p.li_apart(k, l)) continue;
    const auto& cps = g.common_points(k, l);
    if (cps.empty()) continue;
    int pp = cps[std::size_t(rng.below(cps.size()))];
    const auto& onk = g.pts_on_line[std::size_t(k)];
    const auto& onl = g.pts_on_line[std::size_t(l)];
    if (onk.empty() || onl.empty()) continue;
    int a = rng.pick(onk), b = rng.pick(onk), cc = rng.pick(onk);
    int a2 = rng.pick(onl);
    // B' from A'B || B'C, then C' from AB' || BC'
    auto ws = g.lines_containing(a2, b);
    if (ws.empty()) continue;
    int w = rng.pick(ws);
    auto vs = lines_through_parallel(p, g, cc, w);
    if (vs.empty()) continue;
    const auto& b2s = g.common_points(vs[std::size_t(rng.below(vs.size()))], l);
    if (b2s.empty()) continue;
    int b2 = b2s[std::size_t(rng.below(b2s.size()))];
    auto w2s = g.lines_containing(a, b2);
    if (w2s.empty()) continue;
    int w2 = rng.pick(w2s);
    auto v2s = lines_through_parallel(p, g, b, w2);
    if (v2s.empty()) continue;
    const auto& c2s =
        g.common_points(v2s[std::size_t(rng.below(v2s.size()))], l);
    if (c2s.empty()) continue;
    int c2 = c2s[std::size_t(rng.below(c2s.size()))];
    auto res = pappus_affine_check(
        p, g, PappusAffineConfig{k, l, pp, a, b, cc, a2, b2, c2});
    if (res.status == CheckStatus::PremisesFail) continue;
    ++r.configurations;
    if (res.status == CheckStatus::Violated) {
      r.pass = false;
      r.witness = wit("pt", pp, "pt", a, "pt", b, "pt", cc, "pt", a2, "pt", b2,
                      "pt", c2, "li", k, "li", l);
      return r;
    }
  }
  return r;
}

void run_dp(Outcomes& out, const std::string& name, const VerifyOptions& opts,
            std::uint64_t estimate,
            const std::function<DPResult(Budget&)>& exhaustive,
            const std::function<DPResult()>& sampled) {
  if (estimate <= opts.exhaustive_budget) {
    Budget budget{0, opts.exhaustive_budget};
    DPResult r = exhaustive(budget);
    if (r.completed) {
      push(out, name, r.pass, r.witness, r.configurations, "exhaustive");
      return;
    }
  }
  DPResult r = sampled();
  push(out, name, r.pass, r.witness, r.configurations, "sampled");
}

// loop-step estimates for the premise-driven enumerations
std::uint64_t desargues_estimate(const FinitePlane& p, const DeltaTables& dt) {
  const double np = p.np, nl = p.nl;
  double tuples = np * np * nl * nl;
  if (tuples > 5e7) return UINT64_MAX;  // counting the table would cost too
  std::uint64_t n_delta = 0;
  for (int k = 0; k < p.nl; ++k)
    for (int l = 0; l < p.nl; ++l)
      for (int a = 0; a < p.np; ++a)
        for (int b = 0; b < p.np; ++b)
          if (dt.delta(k, l, a, b)) ++n_delta;
  double f = double(n_delta) / tuples;
  double est = tuples + f * tuples * np * nl + f * f * tuples * np * nl * np * nl;
  return est > 1e18 ? UINT64_MAX : std::uint64_t(est);
}

std::uint64_t pappus_estimate(const FinitePlane& p, const PlaneGeometry& g) {
  std::size_t s = 0, t = 0;
  for (const auto& v : g.pts_on_line) s = std::max(s, v.size());
  for (const auto& v : g.lines_thru_pt) t = std::max(t, v.size());
  double ts = double(t) * double(s);
  double est = double(p.nl) * double(s) * double(s) * ts * ts * ts * double(t);
  return est > 1e18 ? UINT64_MAX : std::uint64_t(est);
}

}  // namespace

// ---- verify_plane --------------------------------------------------------------

VerifyReport verify_plane(const FinitePlane& p, Theory theory,
                          const VerifyOptions& opts) {
  const bool projective =
      theory == Theory::Preprojective || theory == Theory::Projective;
  if (projective && p.kind != PlaneKind::Projective)
    throw Error("projective theory on an affine plane");
  if (!projective && p.kind != PlaneKind::Affine)
    throw Error("affine theory on a projective plane");

  PlaneGeometry g(p);
  VerifyReport report;
  Outcomes& out = report.axioms;

  check_common_axioms(out, p, g);

  if (projective) {
    {  // meets exist
      bool ok = true;
      std::string w;
      for (int k = 0; k < p.nl && ok; ++k)
        for (int l = 0; l < p.nl && ok; ++l)
          if (p.li_apart(k, l) && g.common_points(k, l).empty()) {
            ok = false;
            w = wit("li", k, "li", l);
          }
      push(out, "meet_exists", ok, w);
    }
    {  // three pairwise apart points on every line
      bool ok = true;
      std::string w;
      for (int l = 0; l < p.nl && ok; ++l) {
        const auto& pts = g.pts_on_line[std::size_t(l)];
        bool found = false;
        for (std::size_t i = 0; i < pts.size() && !found; ++i)
          for (std::size_t j = 0; j < pts.size() && !found; ++j)
            for (std::size_t kk = 0; kk < pts.size() && !found; ++kk)
              if (p.pt_apart(pts[i], pts[j]) && p.pt_apart(pts[j], pts[kk]) &&
                  p.pt_apart(pts[kk], pts[i]))
                found = true;
        if (!found) {
          ok = false;
          w = wit("li", l);
        }
      }
      push(out, "line_three_points", ok, w);
    }
    {  // three pairwise apart lines through every point
      bool ok = true;
      std::string w;
      for (int a = 0; a < p.np && ok; ++a) {
        const auto& ls = g.lines_thru_pt[std::size_t(a)];
        bool found = false;
        for (std::size_t i = 0; i < ls.size() && !found; ++i)
          for (std::size_t j = 0; j < ls.size() && !found; ++j)
            for (std::size_t kk = 0; kk < ls.size() && !found; ++kk)
              if (p.li_apart(ls[i], ls[j]) && p.li_apart(ls[j], ls[kk]) &&
                  p.li_apart(ls[kk], ls[i]))
                found = true;
        if (!found) {
          ok = false;
          w = wit("pt", a);
        }
      }
      push(out, "point_three_lines", ok, w);
    }
    {  // some line missing every point
      bool ok = true;
      std::string w;
      for (int a = 0; a < p.np && ok; ++a) {
        bool found = false;
        for (int l = 0; l < p.nl && !found; ++l)
          if (p.out(a, l)) found = true;
        if (!found) {
          ok = false;
          w = wit("pt", a);
        }
      }
      push(out, "line_off_point", ok, w);
    }
    {  // dual nondegeneracy
      bool found = false;
      for (int k = 0; k < p.nl && !found; ++k)
        for (int l = 0; l < p.nl && !found; ++l) {
          if (!p.li_apart(k, l)) continue;
          for (int a : g.common_points(k, l)) {
            for (int m = 0; m < p.nl; ++m)
              if (p.out(a, m)) {
                found = true;
                break;
              }
            if (found) break;
          }
        }
      push(out, "dual_nondegenerate", found, "");
    }
  } else {
    {  // two apart points on every line
      bool ok = true;
      std::string w;
      for (int l = 0; l < p.nl && ok; ++l) {
        const auto& pts = g.pts_on_line[std::size_t(l)];
        bool found = false;
        for (std::size_t i = 0; i < pts.size() && !found; ++i)
          for (std::size_t j = 0; j < pts.size() && !found; ++j)
            if (p.pt_apart(pts[i], pts[j])) found = true;
        if (!found) {
          ok = false;
          w = wit("li", l);
        }
      }
      push(out, "line_two_points", ok, w);
    }
    {  // parallel reflexive / symmetric / transitive
      bool ok = true;
      std::string w;
      for (int k = 0; k < p.nl && ok; ++k)
        if (!p.par(k, k)) {
          ok = false;
          w = wit("li", k);
        }
      push(out, "parallel_reflexive", ok, w);
      ok = true;
      w.clear();
      for (int k = 0; k < p.nl && ok; ++k)
        for (int l = 0; l < p.nl && ok; ++l)
          if (p.par(k, l) && !p.par(l, k)) {
            ok = false;
            w = wit("li", k, "li", l);
          }
      push(out, "parallel_symmetric", ok, w);
      ok = true;
      w.clear();
      for (int k = 0; k < p.nl && ok; ++k)
        for (int l = 0; l < p.nl && ok; ++l) {
          if (!p.par(k, l)) continue;
          for (int m = 0; m < p.nl; ++m)
            if (p.par(l, m) && !p.par(k, m)) {
              ok = false;
              w = wit("li", k, "li", l, "li", m);
              break;
            }
          if (!ok) break;
        }
      push(out, "parallel_transitive", ok, w);
    }
    {  // unique parallel through a point
      bool ok = true;
      std::string w;
      for (int a = 0; a < p.np && ok; ++a)
        for (int k = 0; k < p.nl && ok; ++k)
          if (g.parallel_through(a, k) == -1) {
            ok = false;
            w = wit("pt", a, "li", k);
          }
      push(out, "parallel_exists", ok, w);
      ok = true;
      w.clear();
      for (int a = 0; a < p.np && ok; ++a)
        for (int k = 0; k < p.nl && ok; ++k)
          if (g.parallel_through(a, k) == -2) {
            ok = false;
            w = wit("pt", a, "li", k);
          }
      push(out, "parallel_unique", ok, w);
    }
  }

  {  // A#B and l#m: somebody outside something (self-dual axiom)
    bool ok = true;
    std::string w;
    for (int a = 0; a < p.np && ok; ++a)
      for (int b = 0; b < p.np && ok; ++b) {
        if (!p.pt_apart(a, b)) continue;
        for (int k = 0; k < p.nl && ok; ++k)
          for (int l = 0; l < p.nl && ok; ++l) {
            if (!p.li_apart(k, l)) continue;
            if (!p.out(a, k) && !p.out(b, l) && !p.out(a, l) && !p.out(b, k)) {
              ok = false;
              w = wit("pt", a, "pt", b, "li", k, "li", l);
            }
          }
      }
    push(out, "outside_quartet", ok, w);
  }

  if (!projective) {
    {  // k#l and k||l: every point outside one of them
      bool ok = true;
      std::string w;
      for (int k = 0; k < p.nl && ok; ++k)
        for (int l = 0; l < p.nl && ok; ++l) {
          if (!p.li_apart(k, l) || !p.par(k, l)) continue;
          for (int a = 0; a < p.np; ++a)
            if (!p.out(a, k) && !p.out(a, l)) {
              ok = false;
              w = wit("pt", a, "li", k, "li", l);
              break;
            }
          if (!ok) break;
        }
      push(out, "parallel_apart_outside", ok, w);
    }
    {  // A on l,m with k||l and l#m: k#m and k,m intersect
      bool ok = true;
      std::string w;
      for (int l = 0; l < p.nl && ok; ++l)
        for (int m = 0; m < p.nl && ok; ++m) {
          if (!p.li_apart(l, m)) continue;
          bool meet_lm = false;
          for (int a : g.common_points(l, m)) {
            (void)a;
            meet_lm = true;
            break;
          }
          if (!meet_lm) continue;
          for (int k = 0; k < p.nl; ++k) {
            if (!p.par(k, l)) continue;
            if (!p.li_apart(k, m) || g.common_points(k, m).empty()) {
              ok = false;
              w = wit("li", k, "li", l, "li", m);
              break;
            }
          }
          if (!ok) break;
        }
      push(out, "intersection_axiom", ok, w);
    }
  }

  if (theory == Theory::Projective) {
    DeltaTables dt(p, g);
    run_dp(out, "desargues", opts, desargues_estimate(p, dt),
           [&](Budget& b) { return exhaustive_proj_desargues(p, g, dt, b); },
           [&] {
             return sampled_proj_desargues(p, g, dt, opts.seed, opts.samples);
           });
    run_dp(out, "pappus", opts, pappus_estimate(p, g),
           [&](Budget& b) { return exhaustive_proj_pappus(p, g, dt, b); },
           [&] { return sampled_proj_pappus(p, g, dt, opts.seed, opts.samples); });
  } else if (theory == Theory::Affine) {
    run_dp(out, "desargues_small", opts, 0,
           [&](Budget& b) { return exhaustive_aff_small(p, g, b); },
           [&] { return sampled_aff_small(p, g, opts.seed, opts.samples); });
    run_dp(out, "desargues_big", opts, 0,
           [&](Budget& b) { return exhaustive_aff_big(p, g, b); },
           [&] { return sampled_aff_big(p, g, opts.seed, opts.samples); });
    run_dp(out, "pappus", opts, 0,
           [&](Budget& b) { return exhaustive_aff_pappus(p, g, b); },
           [&] { return sampled_aff_pappus(p, g, opts.seed, opts.samples); });
  }

  return report;
}

}  // namespace ringplane
