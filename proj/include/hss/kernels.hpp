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

#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an
// OpenMP variant; both return identical results for identical inputs.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hss/access_structure.hpp"
#include "hss/bytes.hpp"
#include "hss/hash.hpp"

namespace hss {

struct Share;
class TruncatedIterativeHash;

namespace kernels {

/// h_i = H(M_priv_i) for every basis element. shares_by_id[j] belongs to
/// participant j + 1.
std::vector<Bytes> intermediate_hashes_serial(const Basis& basis, std::span<const Bytes> shares_by_id,
                                              const HashSpec& hash);
std::vector<Bytes> intermediate_hashes_parallel(const Basis& basis, std::span<const Bytes> shares_by_id,
                                                const HashSpec& hash);

/// Result of a linking-block search.
struct LinkHit {
  std::uint64_t block = 0;
  std::size_t target_index = 0;
  std::uint64_t trials = 0;
};

/// Candidate block number j of the stream seeded by `seed`.
std::uint64_t candidate_block(std::uint64_t seed, std::uint64_t j);

/// Scans candidate_block(seed, 0), candidate_block(seed, 1), ... for the
/// first block m with C(chaining, m) in targets. trials counts the winning
/// candidate. The parallel kernel evaluates chunks concurrently and keeps
/// the lowest hit index, so it returns the serial answer. Returns nullopt
/// when `budget` candidates pass without a hit.
std::optional<LinkHit> find_link_serial(const TruncatedIterativeHash& hash, std::uint32_t chaining,
                                        std::span<const std::uint32_t> targets, std::uint64_t seed,
                                        std::uint64_t budget);
std::optional<LinkHit> find_link_parallel(const TruncatedIterativeHash& hash, std::uint32_t chaining,
                                          std::span<const std::uint32_t> targets, std::uint64_t seed,
                                          std::uint64_t budget);

}  // namespace kernels
}  // namespace hss
