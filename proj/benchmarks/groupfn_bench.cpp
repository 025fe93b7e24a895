// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <vector>

#include "pgrade/groupfn.hpp"
#include "pgrade/qoperator.hpp"

namespace {

using namespace pgrade;

// r geminals on disjoint orbital pairs, each a two-term combination inside a
// block of four orbitals shifted by two, so neighbours overlap.
GroupProduct geminal_chain(int r, double mix) {
  const int dim = 2 * r + 2;
  std::vector<StateVector> f;
  for (int j = 0; j < r; ++j) {
    StateVector g(dim, 2);
    g.add(Occupation::from_indices({2 * j + 1, 2 * j + 2}), 1.0);
    g.add(Occupation::from_indices({2 * j + 3, 2 * j + 4}), mix);
    f.push_back(g);
  }
  return GroupProduct(std::move(f));
}

// Same orbitals, strongly orthogonal blocks: prunable at q = 1.
GroupProduct geminal_blocks(int r, double mix) {
  const int dim = 4 * r;
  std::vector<StateVector> f;
  for (int j = 0; j < r; ++j) {
    StateVector g(dim, 2);
    g.add(Occupation::from_indices({4 * j + 1, 4 * j + 2}), 1.0);
    g.add(Occupation::from_indices({4 * j + 3, 4 * j + 4}), mix);
    f.push_back(g);
  }
  return GroupProduct(std::move(f));
}

void BM_OverlapUnpruned(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto bra = geminal_blocks(r, 0.5);
  const auto ket = geminal_blocks(r, -0.3);
  for (auto _ : state) benchmark::DoNotOptimize(overlap_group(bra, ket).value);
  state.counters["plans"] = static_cast<double>(overlap_group(bra, ket).stats.plans);
}
BENCHMARK(BM_OverlapUnpruned)->DenseRange(2, 5);

void BM_OverlapPrunedQ1(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto bra = geminal_blocks(r, 0.5);
  const auto ket = geminal_blocks(r, -0.3);
  for (auto _ : state) benchmark::DoNotOptimize(overlap_group_pruned(bra, ket, 1).value);
  state.counters["plans"] = static_cast<double>(overlap_group_pruned(bra, ket, 1).stats.plans);
}
BENCHMARK(BM_OverlapPrunedQ1)->DenseRange(2, 5);

void BM_OverlapThreads(benchmark::State& state) {
  const auto bra = geminal_chain(5, 0.5);
  const auto ket = geminal_chain(5, -0.3);
  EvalOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(overlap_group(bra, ket, opts).value);
}
BENCHMARK(BM_OverlapThreads)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_MatelemHopping(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto bra = geminal_chain(r, 0.5);
  const auto ket = geminal_chain(r, -0.3);
  QOperator::TermMap terms;
  for (int i = 1; i < bra.dim(); ++i) terms[{{i}, {i + 1}}] = 1.0;
  const QOperator op(1, std::move(terms));
  for (auto _ : state) benchmark::DoNotOptimize(matelem(bra, op, ket).value);
}
BENCHMARK(BM_MatelemHopping)->DenseRange(2, 4);

}  // namespace
