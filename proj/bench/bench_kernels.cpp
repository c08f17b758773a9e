#include <benchmark/benchmark.h>

#include <vector>

#include "reflectinv/catalog.hpp"
#include "reflectinv/group.hpp"
#include "reflectinv/kernels.hpp"
#include "reflectinv/poly.hpp"
#include "reflectinv/rep.hpp"

using namespace reflectinv;
using kernels::Backend;

namespace {

// Built once; every benchmark reads from it.
struct Fixture {
  CatalogEntry entry = catalog_get("st8");
  MatrixGroup group = close(entry.generators);
  Representation rep = rep_extend(resolve_rep(entry, "rho13"), group);
  std::vector<QiMatrix> inv_images;
  std::vector<Gauss> weights;

  Fixture() {
    for (std::size_t i = 0; i < group.order(); ++i) {
      inv_images.push_back(rep.image(group.inverse_of(i)));
      weights.push_back(Gauss(1));
    }
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

Backend backend_arg(const benchmark::State& state) {
  return state.range(0) == 0 ? Backend::Serial : Backend::OpenMP;
}

void apply_args(benchmark::internal::Benchmark* b) {
  b->ArgNames({"omp"})->Arg(0);
  if (kernels::openmp_enabled()) b->Arg(1);
  b->Unit(benchmark::kMillisecond);
}

void BM_MolienSum(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::molien_sum(f.group.elements(), f.weights, 40, backend_arg(state)));
}
BENCHMARK(BM_MolienSum)->Apply(apply_args);

void BM_SubstitutionMatrices(benchmark::State& state) {
  const auto& f = fixture();
  const MonomialBasis basis(2, 12);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::substitution_matrices(f.group.elements(), basis, backend_arg(state)));
}
BENCHMARK(BM_SubstitutionMatrices)->Apply(apply_args);

void BM_KronSum(benchmark::State& state) {
  const auto& f = fixture();
  const MonomialBasis basis(2, 8);
  const auto subst = kernels::substitution_matrices(f.group.elements(), basis, Backend::Serial);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::kron_sum(f.inv_images, subst, backend_arg(state)));
}
BENCHMARK(BM_KronSum)->Apply(apply_args);

void BM_ReynoldsSum(benchmark::State& state) {
  const auto& f = fixture();
  const PolyVec v = PolyVec::parse(std::vector<std::string>{"x^7*y", "x^4*y^4", "y^8"});
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::reynolds_sum(f.group.elements(), f.inv_images, v, backend_arg(state)));
}
BENCHMARK(BM_ReynoldsSum)->Apply(apply_args);

}  // namespace

BENCHMARK_MAIN();
