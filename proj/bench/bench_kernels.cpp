/*
 * Copyright 2026 The hss Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "hss/herding.hpp"
#include "hss/kernels.hpp"
#include "hss/random.hpp"

namespace {

using namespace hss;

std::vector<Bytes> random_shares(unsigned n) {
  SeededRandom rng(1);
  std::vector<Bytes> shares(n, Bytes(32));
  for (auto& s : shares) rng.fill(s);
  return shares;
}

// threshold k-of-n gives C(n, k) control values to hash
template <bool Parallel>
void BM_IntermediateHashes(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const Basis basis = threshold_basis(n / 2, n);
  const auto shares = random_shares(n);
  for (auto _ : state) {
    auto out = Parallel ? kernels::intermediate_hashes_parallel(basis, shares, HashSpec{})
                        : kernels::intermediate_hashes_serial(basis, shares, HashSpec{});
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(basis.size()));
}
BENCHMARK(BM_IntermediateHashes<false>)->Name("intermediate_hashes/serial")->Arg(12)->Arg(16);
BENCHMARK(BM_IntermediateHashes<true>)->Name("intermediate_hashes/parallel")->Arg(12)->Arg(16);

template <bool Parallel>
void BM_FindLink(benchmark::State& state) {
  const TruncatedIterativeHash hash(static_cast<unsigned>(state.range(0)));
  const std::vector<std::uint32_t> targets{1, 2, 3, 4};
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  for (auto _ : state) {
    auto hit = Parallel ? kernels::find_link_parallel(hash, 0, targets, seed, ~std::uint64_t{0})
                        : kernels::find_link_serial(hash, 0, targets, seed, ~std::uint64_t{0});
    trials += hit->trials;
    ++seed;
  }
  state.SetItemsProcessed(static_cast<int64_t>(trials));
}
BENCHMARK(BM_FindLink<false>)->Name("find_link/serial")->Arg(16)->Arg(20);
BENCHMARK(BM_FindLink<true>)->Name("find_link/parallel")->Arg(16)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
