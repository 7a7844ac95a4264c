#include <benchmark/benchmark.h>

#include "ringplane/affine.hpp"
#include "ringplane/axioms.hpp"
#include "ringplane/coordinatize.hpp"
#include "ringplane/projective.hpp"

using namespace ringplane;

namespace {

void BM_LineThrough(benchmark::State& state) {
  auto z4 = Ring::zmod(4);
  auto a = mk_proj_point(z4, 1, 2, 3);
  auto b = mk_proj_point(z4, 0, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(line_through(a, b));
}
BENCHMARK(BM_LineThrough);

void BM_DeltaDet(benchmark::State& state) {
  auto z4 = Ring::zmod(4);
  auto k = mk_proj_line(z4, 1, 0, 0);
  auto l = mk_proj_line(z4, 0, 1, 0);
  auto a = mk_proj_point(z4, 1, 1, 1);
  auto b = mk_proj_point(z4, 1, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(delta_det(k, l, a, b));
}
BENCHMARK(BM_DeltaDet);

void BM_DeltaSearch(benchmark::State& state) {
  auto z4 = Ring::zmod(4);
  auto k = mk_proj_line(z4, 1, 0, 0);
  auto l = mk_proj_line(z4, 0, 1, 0);
  auto a = mk_proj_point(z4, 1, 1, 1);
  auto b = mk_proj_point(z4, 1, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(delta_search(k, l, a, b));
}
BENCHMARK(BM_DeltaSearch);

void BM_RelationalDelta(benchmark::State& state) {
  auto model = ProjPlaneModel::build(Ring::zmod(4));
  PlaneGeometry g(model.fin);
  DeltaTables dt(model.fin, g);
  int i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dt.delta(i % 28, (i + 7) % 28, (i + 3) % 28, i % 28));
    ++i;
  }
}
BENCHMARK(BM_RelationalDelta);

void BM_FrameToH(benchmark::State& state) {
  auto z3 = Ring::zmod(3);
  Frame4 f{mk_proj_point(z3, 1, 0, 0), mk_proj_point(z3, 0, 1, 0),
           mk_proj_point(z3, 0, 0, 1), mk_proj_point(z3, 1, 2, 1)};
  for (auto _ : state) benchmark::DoNotOptimize(frame_to_H(f));
}
BENCHMARK(BM_FrameToH);

void BM_EnumerateH_Z3(benchmark::State& state) {
  auto z3 = Ring::zmod(3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_H(z3));
}
BENCHMARK(BM_EnumerateH_Z3);

void BM_BuildProjPlane_Z4(benchmark::State& state) {
  auto z4 = Ring::zmod(4);
  for (auto _ : state) benchmark::DoNotOptimize(ProjPlaneModel::build(z4));
}
BENCHMARK(BM_BuildProjPlane_Z4);

void BM_VerifyFanoSuite(benchmark::State& state) {
  FinitePlane fano = ProjPlaneModel::build(Ring::zmod(2)).fin;
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_plane(fano, Theory::Projective));
}
BENCHMARK(BM_VerifyFanoSuite);

void BM_BuildTpRing_A4(benchmark::State& state) {
  auto model = AffPlaneModel::build(Ring::zmod(4));
  AffineCtx ctx(model.fin);
  for (auto _ : state) benchmark::DoNotOptimize(build_tp_ring(ctx));
}
BENCHMARK(BM_BuildTpRing_A4);

void BM_TranslationApply_A4(benchmark::State& state) {
  auto model = AffPlaneModel::build(Ring::zmod(4));
  AffineCtx ctx(model.fin);
  Translation t{0, 7};
  int i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(translation_apply(ctx, t, i % 16));
    ++i;
  }
}
BENCHMARK(BM_TranslationApply_A4);

}  // namespace

BENCHMARK_MAIN();
