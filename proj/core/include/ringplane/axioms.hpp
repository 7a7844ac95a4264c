#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringplane/projective.hpp"
#include "ringplane/synthetic.hpp"

namespace ringplane {

enum class Theory { Preprojective, Projective, Preaffine, Affine };

Theory theory_for(PlaneKind kind, bool full);

struct AxiomOutcome {
  std::string name;
  bool pass = false;
  std::string witness;             // first counterexample, empty if pass
  std::string mode = "exhaustive"; // or "sampled"
  std::uint64_t configurations = 0;
};

struct VerifyReport {
  std::vector<AxiomOutcome> axioms;
  bool all_pass() const;
  /// One line per axiom: "AXIOM <name> PASS|FAIL witness=<tuple>".
  std::string to_text() const;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  // Mode threshold: an axiom whose premise-driven enumeration is estimated to
  // cost more elementary steps than this is checked by seeded sampling.
  std::uint64_t exhaustive_budget = 300000000;
};

/// Checks every sequent of the requested theory against the relational plane,
/// exhaustively for the coherent axioms and premise-driven (exhaustive or
/// sampled, by cost estimate) for Desargues and Pappus.
VerifyReport verify_plane(const FinitePlane& p, Theory theory,
                          const VerifyOptions& opts = {});

/// Pre-built delta tables for a finite plane: coll(a,b,x) = some line carries
/// all three, and the derived delta relation.
class DeltaTables {
 public:
  DeltaTables(const FinitePlane& p, const PlaneGeometry& g);
  /// delta(k, l, a, b): a point on both k and l collinear with a and b.
  bool delta(int k, int l, int a, int b) const;
  bool coll(int a, int b, int x) const {
    std::size_t n = std::size_t(np_);
    return coll_.get(std::size_t(a) * n + std::size_t(b), std::size_t(x));
  }

 private:
  const FinitePlane* p_;
  const PlaneGeometry* g_;
  int np_;
  BitMat coll_;  // (np*np) x np
};

// Relational configuration checkers, same three-way contract as the
// coordinate versions in projective.hpp.
CheckResult desargues_check(const FinitePlane& p, const PlaneGeometry& g,
                            const DeltaTables& dt, int a, int b, int c, int d,
                            int k, int l, int m, int n);
CheckResult pappus_check(const FinitePlane& p, const PlaneGeometry& g,
                         const DeltaTables& dt, const std::array<int, 6>& pts,
                         const std::array<int, 6>& lines);

struct DesarguesSmallConfig {
  int k, l, m, n_a, n_a2, n_c, n_c2;
  int a, a2, b, b2, c, c2;
};
CheckResult desargues_small_check(const FinitePlane& p, const PlaneGeometry& g,
                                  const DesarguesSmallConfig& cfg);

struct DesarguesBigConfig {
  int k, l, m, n_ab, n_bc, n_ac;
  int pp, a, a2, b, b2, c, c2;
};
CheckResult desargues_big_check(const FinitePlane& p, const PlaneGeometry& g,
                                const DesarguesBigConfig& cfg);

struct PappusAffineConfig {
  int k, l;
  int pp, a, b, c, a2, b2, c2;
};
CheckResult pappus_affine_check(const FinitePlane& p, const PlaneGeometry& g,
                                const PappusAffineConfig& cfg);

enum class DesarguesVariant {
  Parallel3,   // three parallel lines, triangles with two parallel sides
  LemPar1,
  LemPar2,
  LemPar3,
  LemPar4,
  Parallel4,   // four parallel lines
  Concurrent3, // three concurrent lines
  Concurrent4,
  FivePoint,
};
DesarguesVariant desargues_variant_from_name(const std::string& name);

/// Checks one of the derived Desargues statements. Configuration layout
/// (point indices then line indices) is documented per variant in axioms.cpp.
CheckResult desargues_variant_check(const FinitePlane& p,
                                    const PlaneGeometry& g,
                                    DesarguesVariant variant,
                                    const std::vector<int>& pts,
                                    const std::vector<int>& lines);

}  // namespace ringplane
