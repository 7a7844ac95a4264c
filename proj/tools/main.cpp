#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ringplane/affine.hpp"
#include "ringplane/axioms.hpp"
#include "ringplane/coordinatize.hpp"
#include "ringplane/counterexamples.hpp"
#include "ringplane/morphisms.hpp"
#include "ringplane/projective.hpp"
#include "ringplane/ring.hpp"
#include "ringplane/synthetic.hpp"

using namespace ringplane;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

FinitePlane load_plane(const std::string& path) {
  try {
    return parse_plane(read_file(path));
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

RingPtr parse_ring_arg(const std::string& descriptor) {
  try {
    return Ring::parse(descriptor);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> parse_frame(const std::string& arg, std::size_t want) {
  std::vector<int> out;
  std::istringstream in(arg);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("bad frame component '" + tok + "'");
    }
  }
  if (out.size() != want)
    throw UsageError("frame needs " + std::to_string(want) + " indices");
  return out;
}

// ---- build ---------------------------------------------------------------

int cmd_build(const std::string& ring_desc, const std::string& kind,
              const std::string& out_path) {
  RingPtr ring = parse_ring_arg(ring_desc);
  if (!ring->finite()) throw UsageError("build requires a finite ring");
  FinitePlane plane;
  if (kind == "projective")
    plane = ProjPlaneModel::build(ring).fin;
  else if (kind == "affine")
    plane = AffPlaneModel::build(ring).fin;
  else
    throw UsageError("kind must be 'affine' or 'projective'");
  write_output(out_path, serialize_plane(plane));
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

Theory named_theory(const std::string& name, PlaneKind kind) {
  if (name.empty()) return theory_for(kind, true);
  if (name == "preprojective") return Theory::Preprojective;
  if (name == "projective") return Theory::Projective;
  if (name == "preaffine") return Theory::Preaffine;
  if (name == "affine") return Theory::Affine;
  throw UsageError("unknown theory '" + name + "'");
}

int cmd_verify(const std::string& path, const std::string& theory_name,
               std::uint64_t seed, std::uint64_t samples) {
  FinitePlane plane = load_plane(path);
  Theory theory = named_theory(theory_name, plane.kind);
  if ((theory == Theory::Preprojective || theory == Theory::Projective) !=
      (plane.kind == PlaneKind::Projective))
    throw UsageError("theory does not match the plane kind");
  VerifyOptions opts;
  opts.seed = seed;
  opts.samples = samples;
  VerifyReport rep = verify_plane(plane, theory, opts);
  std::cout << rep.to_text();
  return rep.all_pass() ? kExitOk : kExitMathFailure;
}

// ---- counterexamples --------------------------------------------------------

int cmd_counterexamples() {
  auto outcomes = run_counterexamples();
  int reproduced = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    std::cout << "COUNTEREXAMPLE " << i + 1 << " " << outcomes[i].what << ": "
              << (outcomes[i].reproduced ? "REPRODUCED" : "DRIFT") << "\n";
    if (outcomes[i].reproduced) ++reproduced;
  }
  std::cout << reproduced << "/" << outcomes.size()
            << " counterexamples reproduced\n";
  return reproduced == int(outcomes.size()) ? kExitOk : kExitMathFailure;
}

// ---- coordinatize -----------------------------------------------------------

std::string ring_tables_text(const RingPtr& ring) {
  std::ostringstream os;
  const std::size_t n = ring->size();
  auto elems = ring->enumerate();
  os << "ring size " << n << "\n";
  os << "zero " << ring->index(ring->zero()) << "\n";
  os << "one " << ring->index(ring->one()) << "\n";
  os << "add\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      os << (j ? " " : "") << ring->index(ring->add(elems[i], elems[j]));
    os << "\n";
  }
  os << "mul\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      os << (j ? " " : "") << ring->index(ring->mul(elems[i], elems[j]));
    os << "\n";
  }
  os << "neg";
  for (std::size_t i = 0; i < n; ++i)
    os << " " << ring->index(ring->neg(elems[i]));
  os << "\n";
  return os.str();
}

int cmd_coordinatize(const std::string& path, const std::string& frame_arg,
                     std::uint64_t seed, std::uint64_t samples,
                     const std::string& out_path) {
  FinitePlane plane = load_plane(path);
  VerifyOptions opts;
  opts.seed = seed;
  opts.samples = samples;
  VerifyReport rep = verify_plane(plane, theory_for(plane.kind, true), opts);
  if (!rep.all_pass()) {
    std::cout << rep.to_text();
    std::cerr << "plane fails its axiom suite, not coordinatizing\n";
    return kExitMathFailure;
  }

  std::ostringstream os;
  PlaneGeometry g(plane);
  auto noncoll = [&](int a, int b, int c) {
    // a off the join of b and c
    if (!plane.pt_apart(b, c)) return false;
    int l = g.join(b, c);
    return l >= 0 && plane.out(a, l);
  };

  if (plane.kind == PlaneKind::Affine) {
    int x = -1, y = -1, o = -1;
    if (!frame_arg.empty()) {
      auto f = parse_frame(frame_arg, 3);
      x = f[0];
      y = f[1];
      o = f[2];
    } else {
      for (int a = 0; a < plane.np && x < 0; ++a)
        for (int b = 0; b < plane.np && x < 0; ++b)
          for (int c = 0; c < plane.np; ++c)
            if (noncoll(c, a, b)) {
              x = a;
              y = b;
              o = c;
              break;
            }
    }
    if (x < 0 || x >= plane.np || y < 0 || y >= plane.np || o < 0 ||
        o >= plane.np)
      throw UsageError("no usable frame");
    AffineCtx ctx(plane);
    TpRing tp = build_tp_ring(ctx);
    CoordMap cm = coord_map(ctx, tp, x, y, o);
    os << "frame " << x << " " << y << " " << o << "\n";
    os << ring_tables_text(tp.ring);
    for (std::size_t i = 0; i < cm.fwd_pt.size(); ++i)
      os << "iso point " << i << " -> " << cm.fwd_pt[i] << "\n";
    for (std::size_t i = 0; i < cm.fwd_li.size(); ++i)
      os << "iso line " << i << " -> " << cm.fwd_li[i] << "\n";
  } else {
    int a = -1, b = -1, o = -1, i4 = -1;
    if (!frame_arg.empty()) {
      auto f = parse_frame(frame_arg, 4);
      a = f[0];
      b = f[1];
      o = f[2];
      i4 = f[3];
    } else {
      for (int pa = 0; pa < plane.np && a < 0; ++pa)
        for (int pb = 0; pb < plane.np && a < 0; ++pb)
          for (int po = 0; po < plane.np && a < 0; ++po) {
            if (!noncoll(po, pa, pb)) continue;
            for (int pi = 0; pi < plane.np; ++pi)
              if (noncoll(pi, pa, pb) && noncoll(pi, pa, po) &&
                  noncoll(pi, pb, po)) {
                a = pa;
                b = pb;
                o = po;
                i4 = pi;
                break;
              }
          }
    }
    if (a < 0) throw UsageError("no usable frame");
    ProjCoordinatization pc = proj_coordinatize(plane, a, b, o, i4);
    os << "frame " << a << " " << b << " " << o << " " << i4 << "\n";
    os << ring_tables_text(pc.tp.ring);
    for (std::size_t i = 0; i < pc.iso.pt_map.size(); ++i)
      os << "iso point " << i << " -> " << pc.iso.pt_map[i] << "\n";
    for (std::size_t i = 0; i < pc.iso.li_map.size(); ++i)
      os << "iso line " << i << " -> " << pc.iso.li_map[i] << "\n";
  }
  write_output(out_path, os.str());
  return kExitOk;
}

// ---- morphism commands --------------------------------------------------------

int cmd_check_morphism(const std::string& src_path, const std::string& dst_path,
                       const std::string& mor_path) {
  FinitePlane src = load_plane(src_path);
  FinitePlane dst = load_plane(dst_path);
  PlaneMorphism m;
  try {
    m = parse_morphism(read_file(mor_path), src, dst);
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  VerifyReport rep = verify_morphism(m);
  std::cout << rep.to_text();
  return rep.all_pass() ? kExitOk : kExitMathFailure;
}

std::string mat3_text(const Mat3& m) {
  std::ostringstream os;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) os << (c ? " " : "") << m.at(r, c).str();
    os << "\n";
  }
  return os.str();
}

int cmd_decompose(const std::string& kind, const std::string& src_ring_desc,
                  const std::string& dst_ring_desc,
                  const std::string& mor_path) {
  RingPtr src_ring = parse_ring_arg(src_ring_desc);
  RingPtr dst_ring = parse_ring_arg(dst_ring_desc);
  if (!src_ring->finite() || !dst_ring->finite())
    throw UsageError("decompose requires finite rings");
  std::ostringstream os;
  if (kind == "projective") {
    auto src = ProjPlaneModel::build(src_ring);
    auto dst = ProjPlaneModel::build(dst_ring);
    PlaneMorphism m;
    try {
      m = parse_morphism(read_file(mor_path), src.fin, dst.fin);
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    auto dec = decompose_proj(src, dst, m);
    os << "matrix\n" << mat3_text(dec.h.rep());
    os << "hom";
    for (const auto& v : src_ring->enumerate()) os << " " << dec.f(v).str();
    os << "\n";
  } else if (kind == "affine") {
    auto src = AffPlaneModel::build(src_ring);
    auto dst = AffPlaneModel::build(dst_ring);
    PlaneMorphism m;
    try {
      m = parse_morphism(read_file(mor_path), src.fin, dst.fin);
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    auto dec = decompose_aff(src, dst, m);
    os << "matrix\n" << mat3_text(dec.g.mat());
    os << "hom";
    for (const auto& v : src_ring->enumerate()) os << " " << dec.f(v).str();
    os << "\n";
  } else {
    throw UsageError("kind must be 'affine' or 'projective'");
  }
  std::cout << os.str();
  return kExitOk;
}

int cmd_extend(const std::string& src_path, const std::string& dst_path,
               int src_linf, int dst_linf, const std::string& mor_path,
               const std::string& out_path) {
  FinitePlane src = load_plane(src_path);
  FinitePlane dst = load_plane(dst_path);
  if (src_linf < 0 || src_linf >= src.nl || dst_linf < 0 ||
      dst_linf >= dst.nl)
    throw UsageError("line index out of range");
  DerivedAffine dsrc = derive_affine(src, src_linf);
  DerivedAffine ddst = derive_affine(dst, dst_linf);
  PlaneMorphism phi;
  try {
    phi = parse_morphism(read_file(mor_path), dsrc.plane, ddst.plane);
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  PlaneMorphism psi = extend_affine_to_projective(src, dst, dsrc, ddst, phi);
  write_output(out_path, serialize_morphism(psi));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact incidence geometry over commutative local rings"};
  app.require_subcommand(1);

  std::string ring_desc, kind = "projective", out_path, theory_name;
  std::string plane_path, frame_arg, src_path, dst_path, mor_path;
  std::string src_ring_desc, dst_ring_desc;
  std::uint64_t seed = 0, samples = 100000;
  int src_linf = 0, dst_linf = 0;

  auto* build = app.add_subcommand("build", "construct a plane over a ring");
  build->add_option("--ring", ring_desc, "ring descriptor, e.g. zmod:4")
      ->required();
  build->add_option("--kind", kind, "affine or projective")->required();
  build->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* verify =
      app.add_subcommand("verify", "check a plane file against its theory");
  verify->add_option("file", plane_path, "plane file")->required();
  verify->add_option("--theory", theory_name,
                     "preaffine, affine, preprojective or projective");
  verify->add_option("--seed", seed, "seed for sampled axioms");
  verify->add_option("--samples", samples, "sample budget per sampled axiom");

  auto* counter = app.add_subcommand(
      "counterexamples", "re-check the recorded counterexample suite");

  auto* coord = app.add_subcommand(
      "coordinatize", "reconstruct the coordinate ring of a plane file");
  coord->add_option("file", plane_path, "plane file")->required();
  coord->add_option("--frame", frame_arg,
                    "frame indices: x,y,o for affine, a,b,o,i for projective");
  coord->add_option("--seed", seed, "seed for sampled axioms");
  coord->add_option("--samples", samples, "sample budget per sampled axiom");
  coord->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* decomp = app.add_subcommand(
      "decompose", "split a plane morphism into a group part and a ring part");
  decomp->add_option("--kind", kind, "affine or projective")->required();
  decomp->add_option("--source-ring", src_ring_desc, "source ring descriptor")
      ->required();
  decomp->add_option("--target-ring", dst_ring_desc, "target ring descriptor")
      ->required();
  decomp->add_option("--morphism", mor_path, "morphism file")->required();

  auto* extend = app.add_subcommand(
      "extend", "extend a derived-affine morphism to the projective planes");
  extend->add_option("--source", src_path, "source projective plane file")
      ->required();
  extend->add_option("--target", dst_path, "target projective plane file")
      ->required();
  extend->add_option("--source-linf", src_linf, "chosen line in the source")
      ->required();
  extend->add_option("--target-linf", dst_linf, "chosen line in the target")
      ->required();
  extend->add_option("--morphism", mor_path, "affine morphism file")
      ->required();
  extend->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* chk = app.add_subcommand("check-morphism",
                                 "verify a morphism file between two planes");
  chk->add_option("--source", src_path, "source plane file")->required();
  chk->add_option("--target", dst_path, "target plane file")->required();
  chk->add_option("--morphism", mor_path, "morphism file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(ring_desc, kind, out_path);
    if (verify->parsed())
      return cmd_verify(plane_path, theory_name, seed, samples);
    if (counter->parsed()) return cmd_counterexamples();
    if (coord->parsed())
      return cmd_coordinatize(plane_path, frame_arg, seed, samples, out_path);
    if (decomp->parsed())
      return cmd_decompose(kind, src_ring_desc, dst_ring_desc, mor_path);
    if (extend->parsed())
      return cmd_extend(src_path, dst_path, src_linf, dst_linf, mor_path,
                        out_path);
    if (chk->parsed()) return cmd_check_morphism(src_path, dst_path, mor_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  }
  return kExitUsage;
}
