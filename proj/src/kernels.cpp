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

#include "hss/kernels.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hss/herding.hpp"

namespace hss::kernels {

namespace {

void hash_one(Hasher& hasher, const Subset& subset, std::span<const Bytes> shares_by_id, Bytes& message,
              Bytes& out) {
  message.clear();
  for (ParticipantId id : subset.members()) {
    const Bytes& s = shares_by_id[id - 1];
    message.insert(message.end(), s.begin(), s.end());
  }
  out.resize(hasher.length());
  hasher.digest_into({message}, out);
}

std::unordered_map<std::uint32_t, std::size_t> index_targets(std::span<const std::uint32_t> targets) {
  std::unordered_map<std::uint32_t, std::size_t> index;
  for (std::size_t i = 0; i < targets.size(); ++i) index.emplace(targets[i], i);
  return index;
}

constexpr std::uint64_t kChunk = 4096;

}  // namespace

std::vector<Bytes> intermediate_hashes_serial(const Basis& basis, std::span<const Bytes> shares_by_id,
                                              const HashSpec& hash) {
  std::vector<Bytes> out(basis.size());
  Hasher hasher(hash);
  Bytes message;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    hash_one(hasher, basis.subsets()[i], shares_by_id, message, out[i]);
  }
  secure_wipe(message);
  return out;
}

std::vector<Bytes> intermediate_hashes_parallel(const Basis& basis, std::span<const Bytes> shares_by_id,
                                                const HashSpec& hash) {
  std::vector<Bytes> out(basis.size());
  const auto count = static_cast<std::int64_t>(basis.size());
#pragma omp parallel
  {
    Hasher hasher(hash);
    Bytes message;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      hash_one(hasher, basis.subsets()[static_cast<std::size_t>(i)], shares_by_id, message,
               out[static_cast<std::size_t>(i)]);
    }
    secure_wipe(message);
  }
  return out;
}

std::uint64_t candidate_block(std::uint64_t seed, std::uint64_t j) {
  // splitmix64 finalizer over a Weyl sequence.
  std::uint64_t z = seed + (j + 1) * 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::optional<LinkHit> find_link_serial(const TruncatedIterativeHash& hash, std::uint32_t chaining,
                                        std::span<const std::uint32_t> targets, std::uint64_t seed,
                                        std::uint64_t budget) {
  const auto index = index_targets(targets);
  for (std::uint64_t j = 0; j < budget; ++j) {
    const std::uint64_t block = candidate_block(seed, j);
    const auto it = index.find(hash.compress(chaining, block));
    if (it != index.end()) {
      return LinkHit{block, it->second, j + 1};
    }
  }
  return std::nullopt;
}

std::optional<LinkHit> find_link_parallel(const TruncatedIterativeHash& hash, std::uint32_t chaining,
                                          std::span<const std::uint32_t> targets, std::uint64_t seed,
                                          std::uint64_t budget) {
  const auto index = index_targets(targets);
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t base = 0; base < budget; base += kChunk) {
    const auto end = static_cast<std::int64_t>(std::min(budget, base + kChunk));
    std::uint64_t best = kNone;
#pragma omp parallel for schedule(static) reduction(min : best)
    for (auto j = static_cast<std::int64_t>(base); j < end; ++j) {
      const auto ju = static_cast<std::uint64_t>(j);
      if (index.contains(hash.compress(chaining, candidate_block(seed, ju)))) {
        best = std::min(best, ju);
      }
    }
    if (best != kNone) {
      const std::uint64_t block = candidate_block(seed, best);
      return LinkHit{block, index.at(hash.compress(chaining, block)), best + 1};
    }
  }
  return std::nullopt;
}

}  // namespace hss::kernels
